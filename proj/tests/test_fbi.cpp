#include <cmath>

#include "dnlab/fbi.hpp"
#include "doctest.h"

using namespace dnlab;

namespace {

const cplx I(0.0, 1.0);

cplx gauss1(double y) { return cplx(std::exp(-0.5 * y * y), 0.0); }

BoxFunction gauss2d() {
    BoxFunction u;
    u.f = [](double a, double b) { return cplx(std::exp(-0.5 * (a * a + b * b)), 0.0); };
    u.y1min = -6;
    u.y1max = 6;
    u.y2min = -6;
    u.y2max = 6;
    return u;
}

BoxFunction cut2d() {
    BoxFunction u;
    u.f = [](double, double b) { return cplx(std::exp(-b), 0.0); };
    u.y1min = -6;
    u.y1max = 6;
    u.y2min = 0;
    u.y2max = 8;
    return u;
}

}  // namespace

TEST_SUITE("fbi") {
    TEST_CASE("model weights in closed form") {
        CHECK(weight(WeightKind::phi0, cplx(1, 2), cplx(3, -1)) == 2.5);
        CHECK(weight(WeightKind::phi1, cplx(0, 1), cplx(-2, 1)) == -1.0);
        CHECK(weight(WeightKind::phi1, cplx(0, 1), cplx(2, 1)) ==
              weight(WeightKind::phi0, cplx(0, 1), cplx(2, 1)));
        cplx w1(0.3, -0.8), w2(1.2, 0.4);
        CHECK(std::abs(weight(WeightKind::phi1_ext, w1, w2) - weight(WeightKind::phi3, w1, w2) -
                       0.5 * 0.8 * 0.8) <= 1e-15);
        CHECK(weight(WeightKind::phi3, cplx(0, 0), cplx(-0.5, 0)) == -0.125);
        CHECK(weight(WeightKind::phi3, cplx(0, 0), cplx(0.5, 0)) == -0.125);
        CHECK(weight(WeightKind::phi4, w1, w2) == 0.0);
        CHECK(weight(WeightKind::phi1_ext, w1, w2) >= weight(WeightKind::phi3, w1, w2));
        CHECK_THROWS_AS(weight(WeightKind(99), w1, w2), std::invalid_argument);
    }

    TEST_CASE("halfspace gap across the interface") {
        std::vector<std::pair<cplx, cplx>> good = {
            {cplx(0.2, 1.0), cplx(-0.7, 0.3)},
            {cplx(-1.0, 0.5), cplx(0.4, -0.2)},
            {cplx(0, 0), cplx(-2.0, 0)},
        };
        GapReport rep = halfspace_gap_check(good);
        CHECK(rep.ok);
        CHECK(rep.max_deviation <= 1e-12);
        CHECK_THROWS_AS(halfspace_gap_check({}), std::invalid_argument);
        CHECK_THROWS_WITH_AS(halfspace_gap_check({{cplx(0, 1), cplx(0.0, 0.5)}}),
                             doctest::Contains("interface"), std::invalid_argument);
    }

    TEST_CASE("transform of a gaussian against the closed form") {
        double C1 = std::pow(2.0, -0.5) * std::pow(pi, -0.75);
        double h = 0.1;
        for (cplx z : {cplx(0.7, 0.0), cplx(0.5, 0.4)}) {
            cplx want = C1 * std::pow(h, -0.75) * std::sqrt(2.0 * pi * h / (1.0 + h)) *
                        std::exp(-z * z / (2.0 * (1.0 + h)));
            cplx got = fbi1d(gauss1, -6, 6, z, h);
            CHECK(std::abs(got - want) <= 1e-12 * std::abs(want));
        }
    }

    TEST_CASE("two dimensional transform factors over products") {
        BoxFunction u = gauss2d();
        cplx z1(0.3, 0.2), z2(-0.4, 0.1);
        double h = 0.05;
        cplx t2 = fbi(u, z1, z2, h);
        cplx prod = fbi1d(gauss1, -6, 6, z1, h) * fbi1d(gauss1, -6, 6, z2, h);
        CHECK(std::abs(t2 - prod) <= 1e-13 * std::abs(prod));
    }

    TEST_CASE("window truncation is immaterial for a compact gaussian") {
        FBIOptions wide;
        wide.window_halfwidth = 16.0;
        cplx a = fbi1d(gauss1, -6, 6, cplx(0.5, 0.4), 0.1);
        cplx b = fbi1d(gauss1, -6, 6, cplx(0.5, 0.4), 0.1, wide);
        CHECK(std::abs(a - b) <= 1e-12 * std::abs(b));
    }

    TEST_CASE("phase space mass reproduces the L2 norm") {
        double h = 0.1, acc = 0.0;
        int nx = 101, nxi = 61;
        double x0 = -5, x1 = 5, xi0 = -3, xi1 = 3;
        double dx = (x1 - x0) / (nx - 1), dxi = (xi1 - xi0) / (nxi - 1);
        for (int i = 0; i < nx; ++i)
            for (int j = 0; j < nxi; ++j) {
                double x = x0 + i * dx, xi = xi0 + j * dxi;
                double wt = (i == 0 || i == nx - 1 ? 0.5 : 1.0) *
                            (j == 0 || j == nxi - 1 ? 0.5 : 1.0);
                double a = std::abs(fbi1d(gauss1, -6, 6, cplx(x, xi), h));
                acc += wt * a * a * std::exp(-xi * xi / h) * dx * dxi;
            }
        double ratio = acc / std::sqrt(pi);
        CHECK(ratio >= 0.98);
        CHECK(ratio <= 1.02);
    }

    TEST_CASE("vanishing input classifies as analytic by convention") {
        BoxFunction z;
        z.f = [](double, double) { return cplx(0.0, 0.0); };
        z.y1min = -1;
        z.y1max = 1;
        z.y2min = -1;
        z.y2max = 1;
        CHECK(std::abs(fbi(z, cplx(0.2, 0.1), cplx(-0.3, 0), 0.05)) == 0.0);
        auto pts = analyticity_indicator(z, {{cplx(0, 0), cplx(-0.5, 0)}}, {0.02, 0.01, 0.005});
        REQUIRE(pts.size() == 1);
        CHECK(pts[0].rate == 0.0);
        CHECK(pts[0].cls == PointClass::analytic_like);
    }

    TEST_CASE("indicator separates the cut from the interior") {
        std::vector<double> ladder = {0.02, 0.01, 0.005};
        auto pts = analyticity_indicator(
            cut2d(), {{cplx(0, 0), cplx(-0.5, 0)}, {cplx(0, 0), cplx(0.5, 0)}}, ladder);
        REQUIRE(pts.size() == 2);
        CHECK(pts[0].cls == PointClass::boundary_cut_like);
        CHECK(pts[0].rate <= -0.10);
        CHECK(pts[0].rate >= -0.15);
        CHECK(pts[1].cls == PointClass::analytic_like);
        CHECK(std::abs(pts[1].rate) <= 0.02);
    }

    TEST_CASE("entire data stays on the zero rate branch off the origin") {
        auto pts = analyticity_indicator(gauss2d(), {{cplx(0.4, 0), cplx(-0.3, 0)}},
                                         {0.02, 0.01, 0.005});
        CHECK(pts[0].cls == PointClass::analytic_like);
        CHECK(std::abs(pts[0].rate) <= 0.01);
    }

    TEST_CASE("transform validation") {
        BoxFunction u = gauss2d();
        CHECK_THROWS_AS(fbi(u, cplx(0, 0), cplx(0, 0), 0.0), std::invalid_argument);
        CHECK_THROWS_AS(fbi(u, cplx(0, 0), cplx(0, 0), -0.1), std::invalid_argument);
        FBIOptions coarse;
        coarse.panel_width = 2.0;
        CHECK_THROWS_WITH_AS(fbi(u, cplx(0, 0), cplx(0, 0), 0.05, coarse),
                             doctest::Contains("under-resolved"), NumericalError);
        auto bad = [](double y) {
            return y > 0 ? cplx(std::numeric_limits<double>::quiet_NaN(), 0.0) : cplx(1.0, 0.0);
        };
        CHECK_THROWS_WITH_AS(fbi1d(bad, -1, 1, cplx(0, 0), 0.05),
                             doctest::Contains("non-finite"), NumericalError);
    }

    TEST_CASE("indicator ladder validation") {
        BoxFunction u = gauss2d();
        CHECK_THROWS_AS(analyticity_indicator(u, {{cplx(0, 0), cplx(-0.5, 0)}}, {0.02, 0.01}),
                        std::invalid_argument);
        CHECK_THROWS_WITH_AS(
            analyticity_indicator(u, {{cplx(0, 0), cplx(-0.5, 0)}}, {0.02, 0.01, 0.006}),
            doctest::Contains("geometric"), std::invalid_argument);
    }
}
