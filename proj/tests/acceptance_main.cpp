#include <iostream>

#include "dnlab/acceptance.hpp"

int main() {
    auto results = dnlab::run_acceptance(std::cout);
    int failed = 0;
    for (const auto& r : results)
        if (!r.pass) ++failed;
    if (failed) {
        std::cout << failed << " criteria failed" << std::endl;
        return 1;
    }
    std::cout << "all " << results.size() << " criteria passed" << std::endl;
    return 0;
}
