#include "dnlab/fbi.hpp"

#include <cmath>

#include "dnlab/quad.hpp"

namespace dnlab {

namespace {

// per-dimension normalization: 2^{-1/2} pi^{-3/4}, prefactor h^{-3/4}
const double kC1 = std::pow(2.0, -0.5) * std::pow(pi, -0.75);

struct Nodes {
    std::vector<double> y, w;
};

// composite Gauss-Legendre nodes over the window [Re z - W sqrt(h), ...] clipped
// to [ymin, ymax]; empty window -> no nodes
Nodes panel_nodes(double ymin, double ymax, double rez, double h, const FBIOptions& o) {
    if (!(h > 0.0)) throw std::invalid_argument("fbi: h > 0 required");
    if (double(o.points_per_panel) / o.panel_width < 8.0)
        throw NumericalError("fbi: quadrature under-resolved, need >= 8 points per sqrt(h)");
    double sh = std::sqrt(h);
    double lo = std::max(ymin, rez - o.window_halfwidth * sh);
    double hi = std::min(ymax, rez + o.window_halfwidth * sh);
    Nodes nd;
    if (!(hi > lo)) return nd;
    int n = std::max(1, int(std::ceil((hi - lo) / (o.panel_width * sh))));
    const GaussRule& gl = gauss_legendre(o.points_per_panel);
    nd.y.reserve(size_t(n) * gl.nodes.size());
    nd.w.reserve(size_t(n) * gl.nodes.size());
    for (int p = 0; p < n; ++p) {
        double a = lo + (hi - lo) * p / n, b = lo + (hi - lo) * (p + 1) / n;
        double c = 0.5 * (a + b), r = 0.5 * (b - a);
        for (int i = 0; i < gl.nodes.size(); ++i) {
            nd.y.push_back(c + r * gl.nodes[i]);
            nd.w.push_back(r * gl.weights[i]);
        }
    }
    return nd;
}

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

}  // namespace

double weight(WeightKind kind, cplx z1, cplx z2) {
    double i1 = z1.imag(), i2 = z2.imag(), r2 = z2.real();
    switch (kind) {
        case WeightKind::phi0:
            return 0.5 * (i1 * i1 + i2 * i2);
        case WeightKind::phi1_ext:
            return 0.5 * (i1 * i1 + i2 * i2) - 0.5 * r2 * r2;
        case WeightKind::phi1:
            return r2 >= 0.0 ? 0.5 * (i1 * i1 + i2 * i2)
                             : 0.5 * (i1 * i1 + i2 * i2) - 0.5 * r2 * r2;
        case WeightKind::phi3:
            return 0.5 * (i2 * i2 - r2 * r2);
        case WeightKind::phi4:
            return 0.0;
    }
    throw std::invalid_argument("weight: unknown kind");
}

cplx fbi1d(const std::function<cplx(double)>& f, double ymin, double ymax, cplx z,
           double h, const FBIOptions& opts) {
    Nodes nd = panel_nodes(ymin, ymax, z.real(), h, opts);
    cplx acc = 0.0;
    for (size_t i = 0; i < nd.y.size(); ++i) {
        cplx d = z - nd.y[i];
        cplx v = f(nd.y[i]);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw NumericalError("fbi1d: non-finite sample at y = " + std::to_string(nd.y[i]));
        acc += nd.w[i] * v * std::exp(-d * d / (2.0 * h));
    }
    return kC1 * std::pow(h, -0.75) * acc;
}

cplx fbi(const BoxFunction& u, cplx z1, cplx z2, double h, const FBIOptions& opts) {
    Nodes n1 = panel_nodes(u.y1min, u.y1max, z1.real(), h, opts);
    Nodes n2 = panel_nodes(u.y2min, u.y2max, z2.real(), h, opts);
    if (n1.y.empty() || n2.y.empty()) return 0.0;
    std::vector<cplx> k1(n1.y.size()), k2(n2.y.size());
    for (size_t i = 0; i < n1.y.size(); ++i) {
        cplx d = z1 - n1.y[i];
        k1[i] = n1.w[i] * std::exp(-d * d / (2.0 * h));
    }
    for (size_t j = 0; j < n2.y.size(); ++j) {
        cplx d = z2 - n2.y[j];
        k2[j] = n2.w[j] * std::exp(-d * d / (2.0 * h));
    }
    cplx acc = 0.0;
    for (size_t i = 0; i < n1.y.size(); ++i) {
        cplx row = 0.0;
        for (size_t j = 0; j < n2.y.size(); ++j) {
            cplx v = u.f(n1.y[i], n2.y[j]);
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                throw NumericalError("fbi: non-finite sample at (" + std::to_string(n1.y[i]) +
                                     ", " + std::to_string(n2.y[j]) + ")");
            row += k2[j] * v;
        }
        acc += k1[i] * row;
    }
    return kC1 * kC1 * std::pow(h, -1.5) * acc;
}

GapReport halfspace_gap_check(const std::vector<std::pair<cplx, cplx>>& samples) {
    if (samples.empty()) throw std::invalid_argument("halfspace_gap_check: no samples");
    GapReport rep;
    for (const auto& [z1, z2] : samples) {
        double r2 = z2.real();
        if (r2 == 0.0)
            throw std::invalid_argument("halfspace_gap_check: sample on the interface");
        double gap = (weight(WeightKind::phi0, z1, z2) - weight(WeightKind::phi1, z1, z2)) /
                     (r2 * r2);
        double expected = r2 < 0.0 ? 0.5 : 0.0;
        rep.max_deviation = std::max(rep.max_deviation, std::abs(gap - expected));
    }
    rep.ok = rep.max_deviation <= 1e-12;
    return rep;
}

std::string to_string(PointClass c) {
    switch (c) {
        case PointClass::analytic_like: return "analytic_like";
        case PointClass::boundary_cut_like: return "boundary_cut_like";
        case PointClass::undetermined: return "undetermined";
    }
    return "undetermined";
}

std::vector<IndicatorPoint> analyticity_indicator(const BoxFunction& u,
                                                  const std::vector<std::pair<cplx, cplx>>& zgrid,
                                                  const std::vector<double>& h_ladder,
                                                  const FBIOptions& opts) {
    if (h_ladder.size() < 3)
        throw std::invalid_argument("analyticity_indicator: need an h ladder of >= 3 values");
    for (size_t i = 0; i + 2 < h_ladder.size(); ++i) {
        double r1 = h_ladder[i + 1] / h_ladder[i], r2 = h_ladder[i + 2] / h_ladder[i + 1];
        if (std::abs(r1 - r2) > 1e-9 * std::abs(r1))
            throw std::invalid_argument("analyticity_indicator: h ladder must be geometric");
    }
    std::vector<IndicatorPoint> out;
    out.reserve(zgrid.size());
    for (const auto& [z1, z2] : zgrid) {
        IndicatorPoint pt;
        pt.z1 = z1;
        pt.z2 = z2;
        std::vector<double> xs, ys;
        bool dead = true;
        for (double h : h_ladder) {
            double a = std::abs(fbi(u, z1, z2, h, opts));
            if (a >= 1e-300) dead = false;
            xs.push_back(1.0 / h);
            ys.push_back(std::log(std::max(a, 1e-300)));
        }
        double phi3 = weight(WeightKind::phi3, z1, z2);
        double tol = 0.25 * std::abs(phi3);
        if (dead) {
            pt.rate = 0.0;  // vanishing transform: -inf rate clamps to the zero branch
            pt.cls = PointClass::analytic_like;
        } else {
            pt.rate = fit_slope(xs, ys);
            double dist0 = std::abs(pt.rate), dist3 = std::abs(pt.rate - phi3);
            if (dist0 <= tol && dist3 > tol)
                pt.cls = PointClass::analytic_like;
            else if (dist3 <= tol && dist0 > tol)
                pt.cls = PointClass::boundary_cut_like;
            else
                pt.cls = PointClass::undetermined;
        }
        out.push_back(pt);
    }
    return out;
}

}  // namespace dnlab
