#include <cmath>
#include <random>

#include "dnlab/grid.hpp"
#include "doctest.h"

using namespace dnlab;

TEST_SUITE("grid") {
    TEST_CASE("uniform depth spacing") {
        HalfStrip g = make_grid(4, 10.0, 64, DepthRule::uniform);
        double h = 10.0 / 63.0;
        for (int i = 0; i + 1 < g.n_depth_points; ++i)
            CHECK(g.depth[i + 1] - g.depth[i] == doctest::Approx(h).epsilon(1e-14));
    }

    TEST_CASE("minimal legal grid") {
        HalfStrip g = make_grid(1, 1.0, 4, DepthRule::uniform);
        CHECK(g.n_boundary_modes == 1);
        CHECK(g.depth.size() == 4);
        CHECK(g.depth[0] == 0.0);
        CHECK(g.depth[3] == 1.0);
    }

    TEST_CASE("argument validation") {
        CHECK_THROWS_AS(make_grid(4, 0.0, 16, DepthRule::uniform), std::invalid_argument);
        CHECK_THROWS_AS(make_grid(4, -1.0, 16, DepthRule::chebyshev), std::invalid_argument);
        CHECK_THROWS_AS(make_grid(4, 1.0, 3, DepthRule::uniform), std::invalid_argument);
        CHECK_THROWS_AS(make_grid(0, 1.0, 16, DepthRule::uniform), std::invalid_argument);
    }

    TEST_CASE("trapezoid quadrature exact on a linear integrand") {
        HalfStrip g = make_grid(4, 2.0, 65, DepthRule::uniform);
        CVec f(g.n_depth_points);
        for (int i = 0; i < g.n_depth_points; ++i) f[i] = g.depth[i];
        CHECK(std::abs(depth_integral(g, f) - 2.0) <= 1e-13);
    }

    TEST_CASE("weights nonnegative and sum to L") {
        for (DepthRule rule : {DepthRule::uniform, DepthRule::chebyshev}) {
            HalfStrip g = make_grid(3, 1.7, 33, rule);
            double sum = 0.0;
            for (int i = 0; i < g.n_depth_points; ++i) {
                CHECK(g.wdepth[i] >= 0.0);
                sum += g.wdepth[i];
            }
            CHECK(sum == doctest::Approx(1.7).epsilon(1e-13));
        }
    }

    TEST_CASE("depth nodes increasing with pinned endpoints") {
        for (DepthRule rule : {DepthRule::uniform, DepthRule::chebyshev}) {
            HalfStrip g = make_grid(3, 2.5, 21, rule);
            CHECK(g.depth[0] == 0.0);
            CHECK(g.depth[g.n_depth_points - 1] == doctest::Approx(2.5).epsilon(1e-14));
            for (int i = 0; i + 1 < g.n_depth_points; ++i)
                CHECK(g.depth[i + 1] > g.depth[i]);
        }
    }

    TEST_CASE("mode ordering and inversion") {
        HalfStrip g = make_grid(8, 1.0, 8, DepthRule::uniform);
        int want[8] = {0, 1, 2, 3, -4, -3, -2, -1};
        for (int k = 0; k < 8; ++k) {
            CHECK(g.mode(k) == want[k]);
            CHECK(g.index_of_mode(want[k]) == k);
        }
        CHECK(g.max_abs_mode() == 4);
        CHECK_THROWS_AS(g.index_of_mode(5), NumericalError);
        CHECK_THROWS_AS(g.index_of_mode(-5), NumericalError);
    }

    TEST_CASE("boundary points and weight") {
        HalfStrip g = make_grid(6, 1.0, 8, DepthRule::chebyshev);
        for (int p = 0; p < 6; ++p)
            CHECK(g.boundary_point(p) == doctest::Approx(2.0 * pi * p / 6.0).epsilon(1e-15));
        CHECK(6.0 * g.boundary_weight() == doctest::Approx(2.0 * pi).epsilon(1e-15));
    }

    TEST_CASE("sample zero profile") {
        HalfStrip g = make_grid(5, 1.0, 12, DepthRule::chebyshev);
        GridField f = sample_profile(zero_profile(), g);
        CHECK(f.values.cwiseAbs().maxCoeff() == 0.0);
    }

    TEST_CASE("sample depth exponential") {
        HalfStrip g = make_grid(5, 1.0, 12, DepthRule::chebyshev);
        AnalyticProfile p;
        p.evaluator = [](double, double yn) { return cplx(std::exp(-yn), 0.0); };
        GridField f = sample_profile(p, g);
        for (int q = 0; q < 5; ++q)
            for (int i = 0; i < 12; ++i)
                CHECK(std::abs(f.values(q, i) - std::exp(-g.depth[i])) <= 1e-15);
    }

    TEST_CASE("single oscillating mode lands in one row") {
        HalfStrip g = make_grid(8, 1.0, 10, DepthRule::chebyshev);
        AnalyticProfile p = separable_profile(1, [](double yn) { return cplx(std::exp(-yn), 0.0); });
        GridField f = sample_profile(p, g, GridField::Indexing::mode);
        int row1 = g.index_of_mode(1);
        for (int k = 0; k < 8; ++k)
            for (int i = 0; i < 10; ++i) {
                double m = std::abs(f.values(k, i));
                if (k == row1)
                    CHECK(m == doctest::Approx(std::exp(-g.depth[i])).epsilon(1e-12));
                else
                    CHECK(m <= 1e-14);
            }
    }

    TEST_CASE("mode round trip on band-limited data") {
        HalfStrip g = make_grid(16, 1.0, 8, DepthRule::uniform);
        std::mt19937 rng(7);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        CVec f(16);
        for (int p = 0; p < 16; ++p) f[p] = cplx(u(rng), u(rng));
        CVec back = modes_to_boundary(g, boundary_to_modes(g, f));
        CHECK((back - f).cwiseAbs().maxCoeff() <= 1e-12 * f.cwiseAbs().maxCoeff());

        // synthesis matrix agrees with the transform
        CMat F = synthesis_matrix(g);
        CVec viaF = F * boundary_to_modes(g, f);
        CHECK((viaF - f).cwiseAbs().maxCoeff() <= 1e-12);
    }

    TEST_CASE("boundary taylor data is consistent with the evaluator") {
        AnalyticProfile p;
        p.evaluator = [](double, double yn) { return cplx(std::exp(-yn), 0.0); };
        for (int k = 0; k < 30; ++k)
            p.boundary_taylor.push_back([k](double) { return cplx(k % 2 ? -1.0 : 1.0, 0.0); });
        double y = 0.5;
        cplx acc = 0.0;
        double fact = 1.0;
        for (int k = 0; k < 30; ++k) {
            if (k > 0) fact *= k;
            acc += p.boundary_taylor[k](0.0) * std::pow(y, k) / fact;
        }
        CHECK(std::abs(acc - p.evaluator(0.0, y)) <= 1e-12);
    }

    TEST_CASE("evaluator failures carry the sample point") {
        HalfStrip g = make_grid(4, 1.0, 8, DepthRule::uniform);
        AnalyticProfile p;
        p.evaluator = [](double, double yn) -> cplx {
            if (yn > 0.5) throw std::runtime_error("boom");
            return 0.0;
        };
        CHECK_THROWS_WITH_AS(sample_profile(p, g),
                             doctest::Contains("evaluator failed at"), NumericalError);

        AnalyticProfile bad;
        bad.evaluator = [](double, double) { return cplx(std::nan(""), 0.0); };
        CHECK_THROWS_AS(sample_profile(bad, g), NumericalError);
    }

    TEST_CASE("cosine profile splits into two conjugate modes") {
        HalfStrip g = make_grid(8, 1.0, 6, DepthRule::chebyshev);
        AnalyticProfile p = cosine_profile(2, 0.6, [](double) { return cplx(1.0, 0.0); });
        GridField f = sample_profile(p, g, GridField::Indexing::mode);
        for (int k = 0; k < 8; ++k) {
            double m = std::abs(f.values(k, 0));
            if (k == g.index_of_mode(2) || k == g.index_of_mode(-2))
                CHECK(m == doctest::Approx(0.3).epsilon(1e-12));
            else
                CHECK(m <= 1e-14);
        }
    }
}
