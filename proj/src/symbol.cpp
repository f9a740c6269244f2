#include "dnlab/symbol.hpp"

#include <algorithm>
#include <cmath>

namespace dnlab {

namespace {

double plateau_step(double u) {
    // smooth 1 -> 0 transition on [0,1]
    auto s = [](double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; };
    double up = s(1.0 - u), dn = s(u);
    return up / (up + dn);
}

double window_value(double s, double tau, const ProbeParams& probe) {
    double w = 1.0;
    if (probe.has_gaussian()) {
        double h = probe.h > 0.0 ? probe.h : 1.0 / tau;
        double sg = probe.gaussian_width;
        w *= std::exp(-s * s / (2.0 * sg * sg * h));
    }
    if (probe.has_cutoff()) {
        double rho = probe.cutoff_radius, a = std::abs(s);
        if (a >= rho)
            w = 0.0;
        else if (a > rho / 2.0)
            w *= plateau_step((a - rho / 2.0) / (rho / 2.0));
    }
    return w;
}

double wrap_offset(double d) {
    d = std::fmod(d + pi, 2.0 * pi);
    if (d < 0.0) d += 2.0 * pi;
    return d - pi;
}

// least-squares slope of y against x
double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    int n = int(x.size());
    double mx = 0.0, my = 0.0;
    for (int i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double num = 0.0, den = 0.0;
    for (int i = 0; i < n; ++i) {
        num += (x[i] - mx) * (y[i] - my);
        den += (x[i] - mx) * (x[i] - mx);
    }
    return num / den;
}

cplx neville_at_zero(const std::vector<double>& xs, std::vector<cplx> ys) {
    int n = int(xs.size());
    for (int s = 1; s < n; ++s)
        for (int m = 0; m + s < n; ++m)
            ys[m] = ys[m + 1] + (ys[m] - ys[m + 1]) * (0.0 - xs[m + s]) / (xs[m] - xs[m + s]);
    return ys[0];
}

}  // namespace

std::vector<double> default_frequency_ladder() {
    return {4, 6, 8, 12, 16, 24, 32, 48, 64, 96, 128, 192, 256};
}

cplx raw_symbol(const DiscreteOperator& ldot, double yprime, double tau,
                const ProbeParams& probe) {
    if (ldot.grid == nullptr ||
        ldot.domain_space != DiscreteOperator::Space::boundary_modes ||
        ldot.codomain_space != DiscreteOperator::Space::boundary_modes)
        throw std::invalid_argument("raw_symbol: operator must act on boundary modes");
    if (!(tau >= 1.0)) throw std::invalid_argument("raw_symbol: tau >= 1 required");
    const HalfStrip& g = *ldot.grid;

    double sg = probe.has_gaussian() ? probe.gaussian_width : 1.0;
    double margin = probe.exact() ? 0.0 : 4.0 * std::sqrt(tau) * std::max(1.0, 1.0 / sg);
    if (tau + margin > g.max_abs_mode())
        throw NumericalError("raw_symbol: aliasing, tau=" + std::to_string(tau) +
                             " needs mode resolution " + std::to_string(tau + margin) +
                             " but the grid resolves only " +
                             std::to_string(g.max_abs_mode()));

    int N = g.n_boundary_modes;
    CVec p(N);
    for (int idx = 0; idx < N; ++idx) {
        double d = wrap_offset(g.boundary_point(idx) - yprime);
        p[idx] = window_value(d, tau, probe) * std::exp(cplx(0.0, tau * d));
    }
    CVec phat = boundary_to_modes(g, p);
    CVec ghat = ldot.matrix * phat;
    cplx val = 0.0;
    for (int k = 0; k < N; ++k)
        val += ghat[k] * std::exp(cplx(0.0, g.mode(k) * yprime));
    double center = window_value(0.0, tau, probe);
    return val / center;
}

SymbolTable build_symbol_table(const DiscreteOperator& ldot,
                               const std::vector<double>& boundary_points,
                               const std::vector<double>& frequencies,
                               const ProbeParams& probe) {
    if (frequencies.empty() || boundary_points.empty())
        throw std::invalid_argument("build_symbol_table: empty layout");
    for (size_t i = 0; i + 1 < frequencies.size(); ++i)
        if (!(frequencies[i] < frequencies[i + 1]))
            throw std::invalid_argument("build_symbol_table: frequencies must increase");
    if (!(frequencies.front() >= 1.0))
        throw std::invalid_argument("build_symbol_table: frequencies must be >= 1");
    SymbolTable t;
    t.boundary_points = boundary_points;
    t.frequencies = frequencies;
    t.probe = probe;
    t.values.resize(boundary_points.size(), frequencies.size());
    for (size_t p = 0; p < boundary_points.size(); ++p)
        for (size_t f = 0; f < frequencies.size(); ++f)
            t.values(p, f) = raw_symbol(ldot, boundary_points[p], frequencies[f], probe);
    return t;
}

std::vector<AsymptoticSeries> extract_coefficients(const SymbolTable& table, int k_max,
                                                   const PeelOptions& opts) {
    int F = int(table.frequencies.size());
    if (k_max < 1) throw std::invalid_argument("extract_coefficients: k_max >= 1");
    if (F < k_max + 2)
        throw std::invalid_argument("extract_coefficients: need at least k_max + 2 frequencies");
    if (!(table.frequencies.back() >= 10.0 * table.frequencies.front()))
        throw std::invalid_argument("extract_coefficients: frequencies must span a decade");
    int span = opts.stride * opts.order;
    int n_anchor = F - span;
    if (n_anchor < 1)
        throw std::invalid_argument("extract_coefficients: ladder too short for the window");

    std::vector<AsymptoticSeries> out;
    const auto& taus = table.frequencies;
    for (size_t row = 0; row < table.boundary_points.size(); ++row) {
        std::vector<cplx> resid(F);
        double top = 0.0;
        for (int i = 0; i < F; ++i) {
            resid[i] = table.values(row, i);
            top = std::max(top, std::abs(resid[i]));
        }
        // order (-1) sanity: the raw values must decay like a negative power
        if (top > 1e-13) {
            std::vector<double> lx(F), ly(F);
            bool usable = true;
            for (int i = 0; i < F; ++i) {
                double a = std::abs(resid[i]);
                if (a <= 0.0) {
                    usable = false;
                    break;
                }
                lx[i] = std::log(taus[i]);
                ly[i] = std::log(a);
            }
            if (usable) {
                double slope = fit_slope(lx, ly);
                if (slope > -0.5)
                    throw NumericalError(
                        "extract_coefficients: not an asymptotic series of order -1 "
                        "(log-log slope " + std::to_string(slope) + ")");
            }
        }
        AsymptoticSeries s;
        s.offset = 1;
        for (int k = 1; k <= k_max; ++k) {
            int a;
            if (opts.anchor >= 0)
                a = opts.anchor;
            else if (k < opts.slide_start)
                a = n_anchor - 1;
            else
                a = std::max(opts.floor, n_anchor - 1 - opts.slide * (k - opts.slide_start + 1));
            if (a + span > F - 1)
                throw std::invalid_argument("extract_coefficients: anchor outside ladder");
            std::vector<double> xs(opts.order + 1);
            std::vector<cplx> ys(opts.order + 1);
            for (int m = 0; m <= opts.order; ++m) {
                int idx = a + opts.stride * m;
                xs[m] = 1.0 / taus[idx];
                ys[m] = std::pow(taus[idx], double(k)) * resid[idx];
            }
            cplx c = neville_at_zero(xs, ys);
            s.coefficients.push_back(c);
            for (int i = 0; i < F; ++i) resid[i] -= c * std::pow(taus[i], -double(k));
        }
        s.growth_constant = fit_growth_constant(s).c_tilde;
        out.push_back(std::move(s));
    }
    return out;
}

ClasReport validate_clas(const AsymptoticSeries& series, double C) {
    if (series.coefficients.empty())
        throw std::invalid_argument("validate_clas: empty series");
    ClasReport rep;
    int K = series.size();
    double top = 0.0;
    for (const cplx& c : series.coefficients) top = std::max(top, std::abs(c));
    if (top == 0.0) {
        // identically zero series: vacuously a cl.a.s. with any constant
        rep.growth_ok = rep.finite_C = rep.remainder_ok = rep.pass = true;
        return rep;
    }
    std::vector<double> perk(K, 0.0);
    for (int k = 0; k < K; ++k) {
        double mag = std::abs(series.coefficients[k]);
        if (mag == 0.0) continue;
        double log_kk = (k == 0) ? 0.0 : k * std::log(double(k));
        perk[k] = std::exp((std::log(mag) - log_kk) / (k + 1.0));
    }
    rep.fitted_C = *std::max_element(perk.begin(), perk.end());
    rep.growth_ok = rep.fitted_C <= C * (1.0 + 1e-12);
    // super-Gevrey detection: per-k constants still climbing at the tail
    if (K >= 9) {
        double mid = 0.0, tail = 0.0;
        for (int k = K / 3; k < 2 * K / 3; ++k) mid = std::max(mid, perk[k]);
        for (int k = 2 * K / 3; k < K; ++k) tail = std::max(tail, perk[k]);
        if (mid > 0.0 && tail > 1.05 * mid) rep.finite_C = false;
    }
    // remainder after truncation at k <= tau / C: exponential decay of the tail
    double Cres = std::max(C, 1e-2);
    std::vector<double> ts, lr;
    bool tail_alive = false;
    for (int j = 1; j < K; ++j) {
        double tau = Cres * j;
        double r = 0.0;
        for (int k = j + 1; k < K; ++k)
            r += std::abs(series.coefficients[k]) * std::pow(tau, -double(k + series.offset));
        if (r > 0.0) tail_alive = true;
        ts.push_back(tau);
        lr.push_back(std::log(std::max(r, 1e-300)));
    }
    if (!tail_alive) {
        rep.remainder_ok = true;  // no tail mass at all
    } else if (ts.size() >= 2) {
        rep.remainder_slope = fit_slope(ts, lr);
        rep.remainder_ok = rep.remainder_slope < 0.0;
    } else {
        rep.remainder_ok = true;  // too short to test
    }
    rep.pass = rep.growth_ok && rep.finite_C && rep.remainder_ok;
    return rep;
}

}  // namespace dnlab
