#include "dnlab/eikonal.hpp"

#include <cmath>

namespace dnlab {

namespace {

void check_same_box(const Series2& a, const Series2& b) {
    if (a.order != b.order)
        throw std::invalid_argument("Series2: mixed truncation orders");
}

}  // namespace

Series2 Series2::operator+(const Series2& o) const {
    check_same_box(*this, o);
    Series2 out(order);
    out.c = c + o.c;
    return out;
}

Series2 Series2::operator-(const Series2& o) const {
    check_same_box(*this, o);
    Series2 out(order);
    out.c = c - o.c;
    return out;
}

Series2 Series2::operator*(const Series2& o) const {
    check_same_box(*this, o);
    Series2 out(order);
    for (int a = 0; a <= order; ++a)
        for (int b = 0; b <= order; ++b) {
            cplx v = c(a, b);
            if (v == 0.0) continue;
            for (int p = 0; a + p <= order; ++p)
                for (int q = 0; b + q <= order; ++q) out.c(a + p, b + q) += v * o.c(p, q);
        }
    return out;
}

Series2 Series2::scaled(cplx s) const {
    Series2 out(order);
    out.c = c * s;
    return out;
}

Series2 Series2::du() const {
    Series2 out(order);
    for (int a = 1; a <= order; ++a)
        for (int b = 0; b <= order; ++b) out.c(a - 1, b) = double(a) * c(a, b);
    return out;
}

Series2 Series2::dv() const {
    Series2 out(order);
    for (int a = 0; a <= order; ++a)
        for (int b = 1; b <= order; ++b) out.c(a, b - 1) = double(b) * c(a, b);
    return out;
}

cplx Series2::eval(cplx u, cplx v) const {
    cplx acc = 0.0;
    for (int a = order; a >= 0; --a) {
        cplx row = 0.0;
        for (int b = order; b >= 0; --b) row = row * v + c(a, b);
        acc = acc * u + row;
    }
    return acc;
}

Series2 Series2::sqrt() const {
    cplx t00 = c(0, 0);
    if (!(t00.real() > 0.0))
        throw NumericalError("Series2::sqrt: branch cut proximity, Re r <= 0 at the base point");
    Series2 s(order);
    s.c(0, 0) = std::sqrt(t00);
    // graded order: every cross term in s*s at (a,b) has strictly smaller total degree
    for (int g = 1; g <= 2 * order; ++g)
        for (int a = std::max(0, g - order); a <= std::min(g, order); ++a) {
            int b = g - a;
            cplx mid = 0.0;
            for (int p = 0; p <= a; ++p)
                for (int q = 0; q <= b; ++q) {
                    if ((p == 0 && q == 0) || (p == a && q == b)) continue;
                    mid += s.c(p, q) * s.c(a - p, b - q);
                }
            s.c(a, b) = (c(a, b) - mid) / (2.0 * s.c(0, 0));
        }
    return s;
}

SymbolModel constant_symbol_model(int order) {
    SymbolModel m;
    m.r = [](double, double, cplx eta) { return 0.25 * eta * eta; };
    m.rho_jet = Series2::constant(order, 0.25);
    m.base_yprime = 0.0;
    return m;
}

SymbolModel poly_symbol_model(double eps, int order, double base_yprime) {
    SymbolModel m;
    m.r = [eps](double yp, double, cplx eta) {
        return 0.25 * (1.0 + eps * yp * yp) * eta * eta;
    };
    Series2 rho(order);
    double y0 = base_yprime;
    rho.at(0, 0) = 0.25 * (1.0 + eps * y0 * y0);
    if (order >= 1) rho.at(1, 0) = 0.25 * eps * 2.0 * y0;
    if (order >= 2) rho.at(2, 0) = 0.25 * eps;
    m.rho_jet = rho;
    m.base_yprime = base_yprime;
    return m;
}

SymbolModel curved_symbol_model(double eps, int order, double base_yprime) {
    SymbolModel m;
    m.r = [eps](double yp, double yn, cplx eta) {
        return 0.25 * (1.0 + eps * yp * yp + yn) * eta * eta;
    };
    Series2 rho(order);
    double y0 = base_yprime;
    rho.at(0, 0) = 0.25 * (1.0 + eps * y0 * y0);
    if (order >= 1) {
        rho.at(1, 0) = 0.25 * eps * 2.0 * y0;
        rho.at(0, 1) = 0.25;
    }
    if (order >= 2) rho.at(2, 0) = 0.25 * eps;
    m.rho_jet = rho;
    m.base_yprime = base_yprime;
    return m;
}

std::function<cplx(double)> PhaseJet::coefficient(int m) const {
    if (m < 0 || m > order) throw std::invalid_argument("PhaseJet: coefficient order");
    CVec row(order + 1);
    for (int a = 0; a <= order; ++a) row[a] = phi.at(a, m);
    double base = base_yprime;
    int n = order;
    return [row, base, n](double yp) {
        cplx u = yp - base, acc = 0.0;
        for (int a = n; a >= 0; --a) acc = acc * u + row[a];
        return acc;
    };
}

cplx PhaseJet::psi(double u, double v) const {
    return phi.eval(u, v) - (base_yprime + u) * xi;
}

PhaseJet solve_phase_jet(const SymbolModel& model, double xi, int N) {
    if (N < 1) throw std::invalid_argument("solve_phase_jet: order >= 1 required");
    if (model.rho_jet.order < N)
        throw std::invalid_argument("solve_phase_jet: model jet shallower than requested order");
    Series2 rho(N);
    for (int a = 0; a <= N; ++a)
        for (int b = 0; b <= N; ++b) rho.at(a, b) = model.rho_jet.at(a, b);

    PhaseJet jet;
    jet.base_yprime = model.base_yprime;
    jet.xi = xi;
    jet.order = N;
    jet.phi = Series2(N);
    jet.phi.at(0, 0) = model.base_yprime * xi;
    jet.phi.at(1, 0) = xi;
    const cplx I(0.0, 1.0);
    for (int m = 0; m < N; ++m) {
        Series2 dphi = jet.phi.du();
        Series2 root = (rho * dphi * dphi).sqrt();
        // [v^m] of d_v phi = i sqrt(r) fixes the v^{m+1} row
        for (int a = 0; a <= N; ++a) jet.phi.at(a, m + 1) = I * root.at(a, m) / double(m + 1);
    }
    if (!(jet.phi.at(0, 1).imag() > 0.0))
        throw NumericalError("solve_phase_jet: Im phi_1 <= 0 at the base point");
    return jet;
}

cplx phase_residual(const SymbolModel& model, const PhaseJet& jet, double u, double v) {
    cplx dv = jet.phi.dv().eval(u, v);
    cplx du = jet.phi.du().eval(u, v);
    cplx rr = model.r(jet.base_yprime + u, v, du);
    if (!(rr.real() > 0.0))
        throw NumericalError("phase_residual: branch cut proximity, Re r <= 0");
    return dv - cplx(0.0, 1.0) * std::sqrt(rr);
}

PsiBounds psi_bounds_check(const PhaseJet& jet, const SampleBox& box) {
    if (jet.order < 2) throw std::invalid_argument("psi_bounds_check: jet order >= 2 required");
    PsiBounds out;
    out.c1 = std::numeric_limits<double>::infinity();
    for (int iu = 0; iu < box.nu; ++iu) {
        double u = box.nu == 1 ? 0.0 : -box.u_half + 2.0 * box.u_half * iu / (box.nu - 1);
        for (int iv = 1; iv <= box.nv; ++iv) {
            double v = box.v_max * iv / box.nv;
            cplx ps = jet.psi(u, v);
            out.c1 = std::min(out.c1, ps.imag() / v);
            out.c2 = std::max(out.c2, ps.imag() / v);
            out.c3 = std::max(out.c3, std::abs(ps.real()) / (v * v));
        }
    }
    out.ok = out.c1 > 0.0;
    return out;
}

cplx boundary_normal_data(const SymbolModel& model, cplx grad_hat, cplx t, double eta0,
                          double yprime) {
    cplx r1 = model.r(yprime, 0.0, grad_hat - t * eta0);
    cplx r2 = model.r(yprime, 0.0, t * eta0);
    if (!(r1.real() > 0.0) || !(r2.real() > 0.0))
        throw NumericalError("boundary_normal_data: branch cut proximity, Re r <= 0");
    return cplx(0.0, 1.0) * (std::sqrt(r1) + std::sqrt(r2));
}

cplx conormal_point_value(const SymbolModel& model, double eta0) {
    cplx r = model.r(0.0, 0.0, eta0);
    if (!(r.real() > 0.0))
        throw NumericalError("conormal_point_value: branch cut proximity, Re r <= 0");
    return cplx(0.0, -2.0) * std::sqrt(r);
}

}  // namespace dnlab
