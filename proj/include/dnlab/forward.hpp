#pragma once
// Discrete Green / Poisson / DN / linearized-DN operators for P = Lap - V on the
// half-strip, plus the Green-identity residual check. Two assembly routes: a dense
// point-basis solve (general V, desk-scale grids) and a per-mode fast path for
// potentials with no y'-dependence (exact Fourier diagonalization).

#include "dnlab/grid.hpp"

namespace dnlab {

struct DiscreteOperator {
    enum class Space { boundary_modes, interior_field };
    CMat matrix;
    Space domain_space = Space::boundary_modes;
    Space codomain_space = Space::boundary_modes;
    const HalfStrip* grid = nullptr;
};

// dense point-basis solver data; field vectors are indexed J = p * D + i
struct DenseForward {
    CMat K;      // NT x N, column p0 = solution with unit Dirichlet data at point p0
    CMat G;      // NT x NT, column J = solution with unit interior source at J
    CMat S;      // N x NT, rows apply gamma d_nu = -d/dy_n at y_n = 0 per point
    Vec wfull;   // NT depth quadrature weights (boundary weight excluded)
    const HalfStrip* grid = nullptr;
};

DenseForward dense_forward(const AnalyticProfile& V, const HalfStrip& g);

struct ForwardPair {
    DiscreteOperator green;    // interior_field -> interior_field
    DiscreteOperator poisson;  // boundary_modes -> interior_field
};

ForwardPair green_poisson(const AnalyticProfile& V, const HalfStrip& g);
DiscreteOperator dn_map(const AnalyticProfile& V, const HalfStrip& g);

// operator-norm defect of gamma d_nu G = K^t (w) on the fixed smooth probe family
// (all boundary modes tensor depth Chebyshev polynomials of degree <= 8,
// orthonormalized in the weighted pairing), relative to K^t on the same family
double greens_identity_check(const AnalyticProfile& V, const HalfStrip& g);

DiscreteOperator linearized_dn(const AnalyticProfile& V, const AnalyticProfile& q,
                               const HalfStrip& g);

// ---- mode-space fast path (V = V(y_n) only) ----

bool mode_zero_only(const AnalyticProfile& V);
// depth samples of the mode-0 part of V
CVec sample_mode0_depth(const AnalyticProfile& V, const HalfStrip& g);

// column k = discrete solution k_j of (d^2/dy^2 - j^2 - V0) k = 0, k(0)=1, k(L)=0,
// for j = g.mode(k); solutions cached per |j|
CMat dirichlet_profiles(const HalfStrip& g, const CVec& V0);

// V = 0 closed form sinh(|j|(L-y))/sinh(|j|L) sampled on the depth nodes, in the
// overflow-safe exponential form; the continuum Poisson kernel the solver converges to
CMat poisson_kernel_profiles(const HalfStrip& g);

DiscreteOperator dn_map_from_profiles(const HalfStrip& g, const CMat& profiles);
DiscreteOperator linearized_dn_from_profiles(const HalfStrip& g, const CMat& profiles,
                                             const AnalyticProfile& q);

}  // namespace dnlab
