#pragma once
// Complex eikonal phase d_{y_n} phi = i r(y, d_{y'} phi)^{1/2} solved as a Taylor
// jet at a boundary point, plus the derived boundary quantities and bounds checks.

#include <functional>

#include "dnlab/grid.hpp"

namespace dnlab {

// truncated bivariate Taylor series in (u, v) = (y' - base, y_n), box order per
// variable; c(a, b) multiplies u^a v^b
struct Series2 {
    int order = 0;
    CMat c;

    Series2() = default;
    explicit Series2(int n) : order(n), c(CMat::Zero(n + 1, n + 1)) {}
    static Series2 constant(int n, cplx value) {
        Series2 s(n);
        s.c(0, 0) = value;
        return s;
    }

    cplx at(int a, int b) const { return c(a, b); }
    cplx& at(int a, int b) { return c(a, b); }

    Series2 operator+(const Series2& o) const;
    Series2 operator-(const Series2& o) const;
    Series2 operator*(const Series2& o) const;  // truncated at the box
    Series2 scaled(cplx s) const;
    Series2 du() const;
    Series2 dv() const;
    cplx eval(cplx u, cplx v) const;  // Horner in both variables
    // principal branch, graded recurrence; requires Re c(0,0) > 0
    Series2 sqrt() const;
};

// scalar normal form r(y', y_n, eta') = rho(y', y_n) eta'^2 with rho > 0 analytic
struct SymbolModel {
    std::function<cplx(double, double, cplx)> r;  // (y', y_n, eta') -> value
    Series2 rho_jet;       // jet of rho(base + u, v)
    double base_yprime = 0.0;
};

SymbolModel constant_symbol_model(int order);  // rho = 1/4, so r(0, +-1) = 1/4
// rho = (1 + eps y'^2) / 4, jet taken at base_yprime
SymbolModel poly_symbol_model(double eps, int order, double base_yprime = 0.0);
// rho = (1 + eps y'^2 + y_n) / 4; depth dependence makes truncated jets leave a
// genuine order-N residual
SymbolModel curved_symbol_model(double eps, int order, double base_yprime = 0.0);

struct PhaseJet {
    double base_yprime = 0.0;
    double xi = 0.0;   // ray coordinate xi'
    int order = 0;     // N: v-orders 0..N retained
    Series2 phi;       // phi(base + u, v)

    // coefficient function y' -> phi_m(y', xi') of y_n^m (polynomial in y' - base)
    std::function<cplx(double)> coefficient(int m) const;
    cplx psi(double u, double v) const;  // phi - y' xi'
};

PhaseJet solve_phase_jet(const SymbolModel& model, double xi, int N);

// eikonal defect d_v phi - i sqrt(r) with r evaluated by the model itself (not the
// jet) at y' = base + u; measures the truncation error of the jet
cplx phase_residual(const SymbolModel& model, const PhaseJet& jet, double u, double v);

struct SampleBox {
    double u_half = 0.1;  // |y' - base| <= u_half
    double v_max = 0.1;   // 0 < y_n <= v_max
    int nu = 21;
    int nv = 20;
};

struct PsiBounds {
    double c1 = 0.0;  // min Im psi / y_n
    double c2 = 0.0;  // max Im psi / y_n
    double c3 = 0.0;  // max |Re psi| / y_n^2
    bool ok = false;  // c1 > 0
};

PsiBounds psi_bounds_check(const PhaseJet& jet, const SampleBox& box);

// i ( r(y', 0, grad - t eta0)^{1/2} + r(y', 0, t eta0)^{1/2} ), the normal
// derivative of the composite boundary phase
cplx boundary_normal_data(const SymbolModel& model, cplx grad_hat, cplx t, double eta0,
                          double yprime);
inline cplx boundary_normal_data(const SymbolModel& model, cplx grad_hat, cplx t,
                                 double eta0) {
    return boundary_normal_data(model, grad_hat, t, eta0, model.base_yprime);
}

// the eta_n component -2 i r(0, eta0)^{1/2} of the conormal graph point at y = 0
cplx conormal_point_value(const SymbolModel& model, double eta0);

}  // namespace dnlab
