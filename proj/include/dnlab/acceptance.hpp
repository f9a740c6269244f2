#pragma once
// The acceptance suite: one self-contained check per shipped guarantee, each
// printing a single pass/fail line with its measured quantities.

#include <iosfwd>
#include <string>
#include <vector>

namespace dnlab {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

// runs all criteria in order, streaming one line each; never throws (a criterion
// that errors out is reported as FAIL with the diagnostic)
std::vector<CriterionResult> run_acceptance(std::ostream& out);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace dnlab
