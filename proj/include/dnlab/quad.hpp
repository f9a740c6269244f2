#pragma once
// Gauss-Legendre rules on [-1,1], computed once per order by Newton iteration.

#include <cmath>
#include <map>
#include <utility>

#include "dnlab/grid.hpp"

namespace dnlab {

struct GaussRule {
    Vec nodes;
    Vec weights;
};

inline const GaussRule& gauss_legendre(int n) {
    static std::map<int, GaussRule> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    GaussRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        // Chebyshev initial guess, Newton on P_n
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it2 = 0; it2 < 100; ++it2) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        r.nodes[i] = x;
        r.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return cache.emplace(n, std::move(r)).first->second;
}

// integrate f over [a,b] with an n-point rule
template <class F>
auto gauss_panel(const F& f, double a, double b, int n) -> decltype(f(0.0)) {
    const GaussRule& r = gauss_legendre(n);
    decltype(f(0.0)) acc{};
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < r.nodes.size(); ++i)
        acc += r.weights[i] * f(mid + half * r.nodes[i]);
    return acc * half;
}

}  // namespace dnlab
