#include "dnlab/laplace.hpp"

#include <cmath>

#include "dnlab/quad.hpp"

namespace dnlab {

cplx BorelSum::operator()(double t) const {
    if (!in_domain(t)) return 0.0;
    cplx acc = 0.0;
    double fact = 1.0, tk = 1.0;
    for (size_t k = 0; k < coefficients.size(); ++k) {
        if (k > 0) {
            fact *= double(k);
            tk *= t;
        }
        acc += coefficients[k] * tk / fact;
    }
    return acc;
}

namespace {

cplx laplace_pass(const std::function<cplx(double)>& f, double T, double tau,
                  int panels, double* max_abs) {
    // geometric edges from T*1e-7 up to T plus the stub [0, T*1e-7]
    double t0 = T * 1e-7;
    double ratio = std::pow(T / t0, 1.0 / panels);
    cplx acc = 0.0;
    auto kernel = [&](double t) {
        cplx v = f(t);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw NumericalError("laplace: non-finite sample at t=" + std::to_string(t));
        double a = std::abs(v);
        if (a > *max_abs) *max_abs = a;
        return v * std::exp(-t * tau);
    };
    acc += gauss_panel(kernel, 0.0, t0, 16);
    double lo = t0;
    for (int p = 0; p < panels; ++p) {
        double hi = (p == panels - 1) ? T : lo * ratio;
        acc += gauss_panel(kernel, lo, hi, 16);
        lo = hi;
    }
    return acc;
}

}  // namespace

cplx laplace(const std::function<cplx(double)>& f, double T, double tau) {
    if (!(tau > 0.0)) throw std::invalid_argument("laplace: tau must be positive");
    if (!(T > 0.0)) throw std::invalid_argument("laplace: T must be positive");
    double max_abs = 0.0;
    cplx coarse = laplace_pass(f, T, tau, 60, &max_abs);
    cplx fine = laplace_pass(f, T, tau, 120, &max_abs);
    double target = std::max(1e-12 * max_abs, 1e-290);
    if (std::abs(fine - coarse) > target) {
        cplx finer = laplace_pass(f, T, tau, 240, &max_abs);
        if (std::abs(finer - fine) > 100.0 * target)
            throw NumericalError("laplace: quadrature failed to reach target accuracy");
        return finer;
    }
    return fine;
}

TruncatedSum truncated_sum(const AsymptoticSeries& s, double tau, double C) {
    if (!(tau > 0.0)) throw std::invalid_argument("truncated_sum: tau must be positive");
    if (!(C > 0.0)) throw std::invalid_argument("truncated_sum: C must be positive");
    int kstar = int(std::floor(tau / C));
    TruncatedSum out;
    out.saturated = kstar > s.size() - 1;
    int last = std::min(kstar, s.size() - 1);
    for (int k = 0; k <= last; ++k)
        out.value += s.coefficients[k] * std::pow(tau, -double(k + s.offset));
    out.terms_used = last;
    return out;
}

double gamma_tail(int k, double x) {
    if (k < 0) throw std::invalid_argument("gamma_tail: k >= 0 required");
    if (x < 0.0) throw std::invalid_argument("gamma_tail: x >= 0 required");
    if (x == 0.0) return 1.0;
    // e^{-x} sum_{j<=k} x^j/j!, accumulated in log space to dodge overflow
    double acc = 0.0;
    double lx = std::log(x);
    for (int j = 0; j <= k; ++j)
        acc += std::exp(j * lx - x - std::lgamma(j + 1.0));
    return acc;
}

double gamma_tail_bound(int k, double a, double tau, double theta) {
    if (!(theta > 0.0 && theta < 1.0))
        throw std::invalid_argument("gamma_tail_bound: theta must lie in (0,1)");
    double x = a * tau;
    return std::exp(-k * std::log(theta) - (1.0 - theta) * x) / (1.0 - theta);
}

double gamma_tail_bound_optimal(int k, double a, double tau) {
    double x = a * tau;
    if (k == 0) return std::exp(-x);
    double theta = k / x;
    if (!(theta < 1.0))
        throw std::invalid_argument("gamma_tail_bound_optimal: k/(a tau) must be < 1");
    return gamma_tail_bound(k, a, tau, theta);
}

double optimal_theta_rate(double x) {
    if (x <= 0.0) return 0.0;
    return x + x * std::log(1.0 / x);
}

GrowthFit fit_growth_constant(const AsymptoticSeries& s) {
    if (s.coefficients.empty())
        throw std::invalid_argument("fit_growth_constant: empty series");
    GrowthFit fit;
    for (int k = 0; k < s.size(); ++k) {
        double mag = std::abs(s.coefficients[k]);
        if (mag == 0.0) continue;
        double log_kk = (k == 0) ? 0.0 : k * std::log(double(k));
        double c = std::exp((std::log(mag) - log_kk) / (k + 1.0));
        if (c > fit.c_tilde) fit.c_tilde = c;
    }
    fit.c_trunc = std::max(2.0, std::exp(1.0) * fit.c_tilde);
    return fit;
}

BorelSum borel_resum(const AsymptoticSeries& s, double a) {
    if (!(a > 0.0)) throw std::invalid_argument("borel_resum: a must be positive");
    GrowthFit fit = fit_growth_constant(s);
    if (fit.c_tilde > 0.0 && a > 1.0 / (2.0 * fit.c_tilde) * (1.0 + 1e-12))
        throw NumericalError("borel_resum: radius a=" + std::to_string(a) +
                             " exceeds 1/(2 C~)=" + std::to_string(1.0 / (2.0 * fit.c_tilde)) +
                             " for fitted C~=" + std::to_string(fit.c_tilde));
    BorelSum b;
    b.coefficients = s.coefficients;
    b.radius = a;
    return b;
}

}  // namespace dnlab
