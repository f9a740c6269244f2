#pragma once
// Model domain: periodic half-strip y' in [0,2pi), y_n in [0,L], Dirichlet at L.
// Grids, quadrature, depth differentiation matrices, boundary Fourier transforms,
// analytic field representations.

#include <complex>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace dnlab {

using cplx = std::complex<double>;
using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

inline constexpr double pi = 3.141592653589793238462643383279502884;

// Numerical failures (solver breakdowns, tolerance violations, branch cuts).
// Distinct from configuration/usage errors; the CLI maps these to exit 3.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class DepthRule { uniform, chebyshev };

struct HalfStrip {
    int n_boundary_modes = 0;  // N: Fourier modes == boundary collocation points
    double L = 0.0;
    int n_depth_points = 0;  // D
    DepthRule depth_rule = DepthRule::chebyshev;

    Vec depth;    // D nodes, increasing, depth[0]=0, depth[D-1]=L
    Vec wdepth;   // quadrature weights on [0,L] (trapezoid / Clenshaw-Curtis)
    Mat d1;       // depth differentiation matrix d/dy_n (dense)
    Mat d2;       // depth second-derivative matrix used by the interior scheme
    Vec dn_row;   // one-sided row for gamma d_nu = -d/dy_n at y_n = 0

    int n_modes() const { return n_boundary_modes; }
    double boundary_point(int p) const { return 2.0 * pi * p / n_boundary_modes; }
    double boundary_weight() const { return 2.0 * pi / n_boundary_modes; }

    // signed mode for storage index k (DFT order: 0,1,...,-2,-1)
    int mode(int k) const {
        return k <= (n_boundary_modes - 1) / 2 ? k : k - n_boundary_modes;
    }
    int index_of_mode(int j) const {
        int half_up = (n_boundary_modes - 1) / 2;
        int half_dn = n_boundary_modes / 2;
        if (j < -half_dn || j > half_up)
            throw NumericalError("mode " + std::to_string(j) + " outside grid resolution");
        return j >= 0 ? j : j + n_boundary_modes;
    }
    int max_abs_mode() const { return n_boundary_modes / 2; }
};

HalfStrip make_grid(int n_boundary_modes, double L, int n_depth_points, DepthRule rule);

// f(y'_p) = sum_j fhat_j e^{i j y'_p}; forward transform divides by N.
CVec boundary_to_modes(const HalfStrip& g, const CVec& point_values);
CVec modes_to_boundary(const HalfStrip& g, const CVec& mode_values);
// dense synthesis matrix F: point <- mode, F(p,k) = e^{i mode(k) y'_p}
CMat synthesis_matrix(const HalfStrip& g);

struct AnalyticProfile {
    std::function<cplx(double, double)> evaluator;  // (y', y_n) -> value
    // optional Taylor data at y_n = 0: coefficient functions of y_n^k / k!
    std::vector<std::function<cplx(double)>> boundary_taylor;
    double support_depth = std::numeric_limits<double>::infinity();
    // optional separable decomposition sum_j e^{i j y'} g_j(y_n); enables the
    // mode-space fast paths in pde_forward. Empty means "unknown / use dense".
    std::vector<std::pair<int, std::function<cplx(double)>>> mode_profiles;

    bool has_mode_profiles() const { return !mode_profiles.empty(); }
};

AnalyticProfile zero_profile();
// single separable term e^{i j y'} g(y_n)
AnalyticProfile separable_profile(int j, std::function<cplx(double)> g);
// real combination: amp * cos(j y') * g(y_n)  (two mode terms)
AnalyticProfile cosine_profile(int j, double amp, std::function<cplx(double)> g);

struct GridField {
    enum class Indexing { point, mode };
    CMat values;  // (N) x (D), rows indexed by boundary point or mode
    Indexing indexing = Indexing::point;
    const HalfStrip* grid = nullptr;
};

GridField sample_profile(const AnalyticProfile& p, const HalfStrip& g,
                         GridField::Indexing indexing = GridField::Indexing::point);

// depth-only quadrature of a sampled column against the grid weights
inline cplx depth_integral(const HalfStrip& g, const CVec& f) {
    cplx acc = 0.0;
    for (int i = 0; i < g.n_depth_points; ++i) acc += g.wdepth[i] * f[i];
    return acc;
}

}  // namespace dnlab
