#include "dnlab/grid.hpp"

#include <cmath>

namespace dnlab {

namespace {

// CGL nodes on [0,L], increasing, with the spectral differentiation matrix d/dy.
// Standard collocation matrix for x_k = cos(k pi / n) (descending on [-1,1]),
// mapped through y = L(1-x)/2, so d/dy = (-2/L) d/dx.
void chebyshev_nodes(int D, double L, Vec& y, Mat& d1) {
    int n = D - 1;
    Vec x(D), c(D);
    for (int k = 0; k < D; ++k) {
        x[k] = std::cos(pi * k / n);
        c[k] = ((k == 0 || k == n) ? 2.0 : 1.0) * ((k % 2) ? -1.0 : 1.0);
    }
    Mat dm(D, D);
    for (int i = 0; i < D; ++i)
        for (int j = 0; j < D; ++j)
            if (i != j) dm(i, j) = (c[i] / c[j]) / (x[i] - x[j]);
    for (int i = 0; i < D; ++i) {
        double rowsum = 0.0;
        for (int j = 0; j < D; ++j)
            if (i != j) rowsum += dm(i, j);
        dm(i, i) = -rowsum;  // rows of a differentiation matrix kill constants
    }
    y.resize(D);
    for (int k = 0; k < D; ++k) y[k] = L * (1.0 - x[k]) / 2.0;
    d1 = (-2.0 / L) * dm;
}

// Clenshaw-Curtis weights on the CGL nodes above (same ordering), scaled to [0,L].
Vec clenshaw_curtis(int D, double L) {
    int n = D - 1;
    Vec w(D);
    for (int j = 0; j < D; ++j) {
        double theta = pi * j / n;
        double s = 0.0;
        for (int m = 1; m <= n / 2; ++m) {
            double b = (2 * m < n) ? 2.0 : 1.0;
            s += b / (4.0 * m * m - 1.0) * std::cos(2.0 * m * theta);
        }
        double cj = 1.0 - s;
        w[j] = (j == 0 || j == n) ? cj / n : 2.0 * cj / n;
    }
    return w * (L / 2.0);
}

}  // namespace

HalfStrip make_grid(int n_boundary_modes, double L, int n_depth_points, DepthRule rule) {
    if (!(L > 0.0)) throw std::invalid_argument("make_grid: L must be positive");
    if (n_depth_points < 4) throw std::invalid_argument("make_grid: n_depth_points >= 4 required");
    if (n_boundary_modes < 1) throw std::invalid_argument("make_grid: n_boundary_modes >= 1 required");

    HalfStrip g;
    g.n_boundary_modes = n_boundary_modes;
    g.L = L;
    g.n_depth_points = n_depth_points;
    g.depth_rule = rule;

    int D = n_depth_points;
    if (rule == DepthRule::chebyshev) {
        chebyshev_nodes(D, L, g.depth, g.d1);
        g.wdepth = clenshaw_curtis(D, L);
        g.d2 = g.d1 * g.d1;
        g.dn_row = -g.d1.row(0).transpose();
    } else {
        double h = L / (D - 1);
        g.depth.resize(D);
        for (int i = 0; i < D; ++i) g.depth[i] = i * h;
        g.wdepth = Vec::Constant(D, h);
        g.wdepth[0] = g.wdepth[D - 1] = h / 2.0;
        // centered first derivative (second order), one-sided at the ends
        g.d1 = Mat::Zero(D, D);
        g.d1(0, 0) = -3.0 / (2 * h); g.d1(0, 1) = 4.0 / (2 * h); g.d1(0, 2) = -1.0 / (2 * h);
        for (int i = 1; i < D - 1; ++i) {
            g.d1(i, i - 1) = -1.0 / (2 * h);
            g.d1(i, i + 1) = 1.0 / (2 * h);
        }
        g.d1(D - 1, D - 1) = 3.0 / (2 * h); g.d1(D - 1, D - 2) = -4.0 / (2 * h); g.d1(D - 1, D - 3) = 1.0 / (2 * h);
        // interior 3-point Laplacian; end rows are overwritten by BC rows downstream
        g.d2 = Mat::Zero(D, D);
        for (int i = 1; i < D - 1; ++i) {
            g.d2(i, i - 1) = 1.0 / (h * h);
            g.d2(i, i) = -2.0 / (h * h);
            g.d2(i, i + 1) = 1.0 / (h * h);
        }
        g.dn_row = -g.d1.row(0).transpose();
    }
    return g;
}

CVec boundary_to_modes(const HalfStrip& g, const CVec& point_values) {
    int N = g.n_boundary_modes;
    if (point_values.size() != N)
        throw std::invalid_argument("boundary_to_modes: size mismatch");
    CVec out(N);
    for (int k = 0; k < N; ++k) {
        int j = g.mode(k);
        cplx acc = 0.0;
        for (int p = 0; p < N; ++p)
            acc += point_values[p] * std::exp(cplx(0.0, -j * g.boundary_point(p)));
        out[k] = acc / double(N);
    }
    return out;
}

CVec modes_to_boundary(const HalfStrip& g, const CVec& mode_values) {
    int N = g.n_boundary_modes;
    if (mode_values.size() != N)
        throw std::invalid_argument("modes_to_boundary: size mismatch");
    CVec out(N);
    for (int p = 0; p < N; ++p) {
        cplx acc = 0.0;
        for (int k = 0; k < N; ++k)
            acc += mode_values[k] * std::exp(cplx(0.0, g.mode(k) * g.boundary_point(p)));
        out[p] = acc;
    }
    return out;
}

CMat synthesis_matrix(const HalfStrip& g) {
    int N = g.n_boundary_modes;
    CMat F(N, N);
    for (int p = 0; p < N; ++p)
        for (int k = 0; k < N; ++k)
            F(p, k) = std::exp(cplx(0.0, g.mode(k) * g.boundary_point(p)));
    return F;
}

AnalyticProfile zero_profile() {
    AnalyticProfile p;
    p.evaluator = [](double, double) { return cplx(0.0); };
    p.boundary_taylor.push_back([](double) { return cplx(0.0); });
    p.support_depth = 0.0;
    p.mode_profiles.emplace_back(0, [](double) { return cplx(0.0); });
    return p;
}

AnalyticProfile separable_profile(int j, std::function<cplx(double)> g) {
    AnalyticProfile p;
    p.evaluator = [j, g](double yp, double yn) {
        return std::exp(cplx(0.0, j * yp)) * g(yn);
    };
    p.mode_profiles.emplace_back(j, std::move(g));
    return p;
}

AnalyticProfile cosine_profile(int j, double amp, std::function<cplx(double)> g) {
    AnalyticProfile p;
    p.evaluator = [j, amp, g](double yp, double yn) {
        return amp * std::cos(j * yp) * g(yn);
    };
    auto half = [amp, g](double yn) { return 0.5 * amp * g(yn); };
    p.mode_profiles.emplace_back(j, half);
    if (j != 0) p.mode_profiles.emplace_back(-j, half);
    return p;
}

GridField sample_profile(const AnalyticProfile& p, const HalfStrip& g,
                         GridField::Indexing indexing) {
    int N = g.n_boundary_modes, D = g.n_depth_points;
    GridField f;
    f.grid = &g;
    f.indexing = GridField::Indexing::point;
    f.values.resize(N, D);
    for (int q = 0; q < N; ++q) {
        double yp = g.boundary_point(q);
        for (int i = 0; i < D; ++i) {
            cplx v;
            try {
                v = p.evaluator(yp, g.depth[i]);
            } catch (const std::exception& e) {
                throw NumericalError("sample_profile: evaluator failed at (y'=" +
                                     std::to_string(yp) + ", y_n=" + std::to_string(g.depth[i]) +
                                     "): " + e.what());
            }
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                throw NumericalError("sample_profile: non-finite value at (y'=" +
                                     std::to_string(yp) + ", y_n=" + std::to_string(g.depth[i]) + ")");
            f.values(q, i) = v;
        }
    }
    if (indexing == GridField::Indexing::mode) {
        CMat m(N, D);
        for (int i = 0; i < D; ++i)
            m.col(i) = boundary_to_modes(g, f.values.col(i));
        f.values = std::move(m);
        f.indexing = GridField::Indexing::mode;
    }
    return f;
}

}  // namespace dnlab
