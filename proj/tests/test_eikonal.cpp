#include <cmath>

#include "dnlab/eikonal.hpp"
#include "doctest.h"

using namespace dnlab;

namespace {

const cplx I(0.0, 1.0);

SymbolModel negative_model(int order) {
    SymbolModel m;
    m.r = [](double, double, cplx eta) { return -eta * eta; };
    m.rho_jet = Series2::constant(order, cplx(-1.0, 0.0));
    return m;
}

}  // namespace

TEST_SUITE("eikonal") {
    TEST_CASE("series arithmetic on the truncation box") {
        Series2 a(3), b(3);
        a.at(0, 0) = 1.0;
        a.at(1, 0) = 2.0;
        a.at(0, 1) = 3.0;
        b.at(1, 1) = 5.0;
        Series2 s = a + b;
        CHECK(s.at(0, 0) == cplx(1.0));
        CHECK(s.at(1, 1) == cplx(5.0));
        CHECK((a - b).at(1, 1) == cplx(-5.0));

        Series2 u(2), v(2);
        u.at(0, 0) = 1.0;
        u.at(1, 0) = 1.0;
        v.at(0, 0) = 1.0;
        v.at(0, 1) = 1.0;
        Series2 p = u * v;
        CHECK(p.at(0, 0) == cplx(1.0));
        CHECK(p.at(1, 0) == cplx(1.0));
        CHECK(p.at(0, 1) == cplx(1.0));
        CHECK(p.at(1, 1) == cplx(1.0));
        CHECK(p.at(2, 0) == cplx(0.0));

        Series2 q(3);
        q.at(2, 0) = 1.0;
        CHECK((q * q).c.cwiseAbs().maxCoeff() == 0.0);  // u^4 falls off the box

        CHECK(a.scaled(2.0 * I).at(1, 0) == cplx(0.0, 4.0));

        Series2 m(3);
        m.at(2, 1) = 1.0;
        CHECK(m.du().at(1, 1) == cplx(2.0));
        CHECK(m.dv().at(2, 0) == cplx(1.0));

        cplx val = a.eval(cplx(0.3, 0.1), cplx(0.2, 0.0));
        cplx want = 1.0 + 2.0 * cplx(0.3, 0.1) + 3.0 * cplx(0.2, 0.0);
        CHECK(std::abs(val - want) <= 1e-15);

        Series2 wrong(4);
        CHECK_THROWS_AS(a + wrong, std::invalid_argument);
    }

    TEST_CASE("series square root") {
        Series2 sq(3);
        sq.at(0, 0) = 1.0;
        sq.at(1, 0) = 2.0;
        sq.at(2, 0) = 1.0;  // (1 + u)^2
        Series2 r = sq.sqrt();
        CHECK(std::abs(r.at(0, 0) - 1.0) <= 1e-15);
        CHECK(std::abs(r.at(1, 0) - 1.0) <= 1e-15);
        CHECK(std::abs(r.at(2, 0)) <= 1e-15);
        CHECK(std::abs(r.at(0, 1)) <= 1e-15);

        Series2 lin(3);
        lin.at(0, 0) = 1.0;
        lin.at(0, 1) = 1.0;  // 1 + v
        Series2 h = lin.sqrt();
        CHECK(std::abs(h.at(0, 1) - 0.5) <= 1e-15);
        CHECK(std::abs(h.at(0, 2) + 0.125) <= 1e-15);
        CHECK(std::abs(h.at(0, 3) - 0.0625) <= 1e-15);

        CHECK(std::abs(Series2::constant(2, 4.0).sqrt().at(0, 0) - 2.0) <= 1e-15);
        CHECK_THROWS_WITH_AS(Series2::constant(2, cplx(-1.0, 0.0)).sqrt(),
                             doctest::Contains("branch"), NumericalError);
    }

    TEST_CASE("constant symbol collapses the jet to the linear phase") {
        SymbolModel cm = constant_symbol_model(6);
        PhaseJet j = solve_phase_jet(cm, 1.0, 6);
        CHECK(std::abs(j.phi.at(0, 0)) <= 1e-15);
        CHECK(std::abs(j.phi.at(1, 0) - 1.0) <= 1e-15);
        CHECK(std::abs(j.phi.at(0, 1) - 0.5 * I) <= 1e-15);
        double rest = 0.0;
        for (int a = 0; a <= 6; ++a)
            for (int b = 0; b <= 6; ++b)
                if (a + b >= 2) rest = std::max(rest, std::abs(j.phi.at(a, b)));
        CHECK(rest <= 1e-15);

        PhaseJet j2 = solve_phase_jet(cm, 2.0, 6);
        CHECK(std::abs(j2.phi.at(1, 0) - 2.0) <= 1e-15);
        CHECK(std::abs(j2.phi.at(0, 1) - I) <= 1e-15);

        CHECK(std::abs(j.coefficient(0)(0.4) - 0.4) <= 1e-15);
        CHECK(std::abs(j.coefficient(1)(0.9) - 0.5 * I) <= 1e-15);
        CHECK_THROWS_AS(j.coefficient(7), std::invalid_argument);
        CHECK(std::abs(j.psi(0.3, 0.2) - 0.1 * I) <= 1e-15);
    }

    TEST_CASE("jet truncation leaves an order-N defect") {
        for (int N : {4, 5, 6}) {
            SymbolModel m = curved_symbol_model(0.1, N, 0.0);
            PhaseJet j = solve_phase_jet(m, 1.0, N);
            double ra = std::abs(phase_residual(m, j, 0.0, 0.1));
            double rb = std::abs(phase_residual(m, j, 0.0, 0.05));
            double ratio = ra / rb;
            double pow2 = std::pow(2.0, N);
            CHECK(ratio >= 0.9 * pow2);
            CHECK(ratio <= 1.05 * pow2);
        }
        SymbolModel m6 = curved_symbol_model(0.1, 6, 0.0);
        PhaseJet j6 = solve_phase_jet(m6, 1.0, 6);
        CHECK(std::abs(phase_residual(m6, j6, 0.0, 0.1)) <= 1e-7);
        CHECK(std::abs(phase_residual(m6, j6, 0.05, 0.05)) <= 1e-9);
    }

    TEST_CASE("ray reflection conjugates the phase") {
        SymbolModel pm = poly_symbol_model(0.1, 6, 0.0);
        PhaseJet jp = solve_phase_jet(pm, 1.0, 6);
        PhaseJet jm = solve_phase_jet(pm, -1.0, 6);
        double worst = 0.0;
        for (int a = 0; a <= 6; ++a)
            for (int b = 0; b <= 6; ++b)
                worst = std::max(worst, std::abs(jm.phi.at(a, b) + std::conj(jp.phi.at(a, b))));
        CHECK(worst <= 1e-14);
        cplx pp = jp.psi(0.05, 0.07);
        cplx pn = jm.psi(0.05, 0.07);
        CHECK(std::abs(pn + std::conj(pp)) <= 1e-14);
        CHECK(std::abs(pn.imag() - pp.imag()) <= 1e-14);
    }

    TEST_CASE("phase is one homogeneous in the ray coordinate") {
        SymbolModel pm = poly_symbol_model(0.1, 6, 0.0);
        PhaseJet j1 = solve_phase_jet(pm, 1.0, 6);
        PhaseJet j2 = solve_phase_jet(pm, 2.0, 6);
        double worst = 0.0;
        for (int a = 0; a <= 6; ++a)
            for (int b = 0; b <= 6; ++b)
                worst = std::max(worst, std::abs(j2.phi.at(a, b) - 2.0 * j1.phi.at(a, b)));
        CHECK(worst <= 1e-14);
        CHECK(j1.phi.at(0, 1).imag() > 0.4);
    }

    TEST_CASE("transversal decay bounds on the sample box") {
        SymbolModel cm = constant_symbol_model(6);
        PsiBounds bc = psi_bounds_check(solve_phase_jet(cm, 1.0, 6), SampleBox{});
        CHECK(bc.ok);
        CHECK(bc.c1 == 0.5);
        CHECK(bc.c2 == 0.5);
        CHECK(bc.c3 == 0.0);

        SymbolModel pm = poly_symbol_model(0.1, 6, 0.0);
        PhaseJet j1 = solve_phase_jet(pm, 1.0, 6);
        PsiBounds b1 = psi_bounds_check(j1, SampleBox{});
        CHECK(b1.ok);
        CHECK(b1.c1 >= 0.45);
        CHECK(b1.c1 <= 0.5);
        CHECK(b1.c2 >= 0.5);
        CHECK(b1.c2 <= 0.55);
        CHECK(b1.c3 <= 5e-3);

        PsiBounds b3 = psi_bounds_check(solve_phase_jet(pm, 3.0, 6), SampleBox{});
        CHECK(std::abs(b3.c1 - 3.0 * b1.c1) <= 1e-12);
        CHECK(std::abs(b3.c2 - 3.0 * b1.c2) <= 1e-12);
        CHECK(std::abs(b3.c3 - 3.0 * b1.c3) <= 1e-12);
    }

    TEST_CASE("boundary normal data of the composite phase") {
        SymbolModel cm = constant_symbol_model(4);
        CHECK(std::abs(boundary_normal_data(cm, 0.0, 1.0, 2.0) - 2.0 * I) <= 1e-15);
        CHECK(std::abs(boundary_normal_data(cm, 4.0, 1.0, 2.0) - 2.0 * I) <= 1e-15);
        CHECK(std::abs(boundary_normal_data(cm, 0.0, 0.5, 2.0) - I) <= 1e-15);
        CHECK_THROWS_WITH_AS(boundary_normal_data(cm, 2.0, 1.0, 2.0),
                             doctest::Contains("branch"), NumericalError);
        CHECK(std::abs(conormal_point_value(cm, 1.0) + I) <= 1e-15);
        CHECK(std::abs(conormal_point_value(cm, 3.0) + 3.0 * I) <= 1e-15);
    }

    TEST_CASE("branch and order validation") {
        SymbolModel bad = negative_model(4);
        CHECK_THROWS_AS(solve_phase_jet(bad, 1.0, 4), NumericalError);
        CHECK_THROWS_AS(conormal_point_value(bad, 1.0), NumericalError);

        SymbolModel cm = constant_symbol_model(4);
        CHECK_THROWS_AS(solve_phase_jet(cm, 1.0, 0), std::invalid_argument);
        CHECK_THROWS_AS(solve_phase_jet(cm, 1.0, 6), std::invalid_argument);
        PhaseJet shallow = solve_phase_jet(cm, 1.0, 1);
        CHECK_THROWS_AS(psi_bounds_check(shallow, SampleBox{}), std::invalid_argument);
    }
}
