#pragma once
// Laplace transforms, truncated asymptotic sums, incomplete-gamma tails and their
// bounds, Gevrey-1 growth-constant fitting, Borel resummation.

#include <functional>
#include <vector>

#include "dnlab/grid.hpp"

namespace dnlab {

struct AsymptoticSeries {
    // sigma(tau) ~ sum_k coefficients[k] tau^{-(k+offset)}
    std::vector<cplx> coefficients;
    double growth_constant = 0.0;  // C~ with |q_k| <= C~^{k+1} k^k (k^0 := 1)
    int offset = 1;

    int size() const { return int(coefficients.size()); }
};

struct BorelSum {
    std::vector<cplx> coefficients;  // Taylor data q_k = q^{(k)}(0)
    double radius = 0.0;             // valid on [0, radius]
    bool in_domain(double t) const { return t >= 0.0 && t <= radius; }
    cplx operator()(double t) const;  // sum q_k t^k / k!, 0 outside [0, radius]
};

// integral_0^T e^{-t tau} f(t) dt by composite Gauss-Legendre panels refined
// geometrically toward t = 0, with one self-check refinement pass
cplx laplace(const std::function<cplx(double)>& f, double T, double tau);

struct TruncatedSum {
    cplx value = 0.0;
    int terms_used = 0;    // index of the last term included
    bool saturated = false;  // floor(tau/C) exceeded the stored coefficients
};
// sum_{k=0}^{floor(tau/C)} q_k tau^{-(k+offset)}
TruncatedSum truncated_sum(const AsymptoticSeries& s, double tau, double C);

// integral_x^infty e^{-s} s^k / k! ds = e^{-x} sum_{j<=k} x^j / j!
double gamma_tail(int k, double x);

// theta^{-k} e^{-(1-theta) a tau} / (1-theta), valid upper bound for gamma_tail(k, a*tau)
double gamma_tail_bound(int k, double a, double tau, double theta);
// bound at the optimal theta = k/(a tau) (k = 0: the theta -> 0 limit e^{-a tau})
double gamma_tail_bound_optimal(int k, double a, double tau);
// f(x) = x + x ln(1/x), the exponent-loss profile of the optimal-theta bound
double optimal_theta_rate(double x);

struct GrowthFit {
    double c_tilde = 0.0;  // minimal C~ with |q_k| <= C~^{k+1} k^k over stored k
    double c_trunc = 0.0;  // recommended truncation constant
};
GrowthFit fit_growth_constant(const AsymptoticSeries& s);

// convergent Borel sum on [0, a]; requires a <= 1/(2 C~) for the fitted C~
BorelSum borel_resum(const AsymptoticSeries& s, double a);

}  // namespace dnlab
