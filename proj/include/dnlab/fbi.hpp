#pragma once
// Gaussian FBI transform with the quadratic phase i(z-y)^2/2, the associated
// exponential weights, and an h-rate analyticity detector.

#include <functional>
#include <string>
#include <vector>

#include "dnlab/grid.hpp"

namespace dnlab {

enum class WeightKind { phi0, phi1, phi1_ext, phi3, phi4 };

// closed-form weights for the model phase; z = (z1, z2), z2 the normal slot
double weight(WeightKind kind, cplx z1, cplx z2);

// function supported on a closed real box, smooth in its interior
struct BoxFunction {
    std::function<cplx(double, double)> f;
    double y1min = 0.0, y1max = 0.0;
    double y2min = 0.0, y2max = 0.0;
};

struct FBIOptions {
    double window_halfwidth = 12.0;  // integration window: Re z +- this * sqrt(h)
    double panel_width = 0.5;        // quadrature panel width in units of sqrt(h)
    int points_per_panel = 8;        // Gauss-Legendre nodes per panel
};

// Tu(z; h) = C h^{-3n/4} integral e^{-(z-y)^2/(2h)} u(y) dy over the box, n = 2
cplx fbi(const BoxFunction& u, cplx z1, cplx z2, double h, const FBIOptions& opts = {});

// one-dimensional factor (n = 1 normalization); the 2D transform of a product
// u(y1) v(y2) is the product of the factors
cplx fbi1d(const std::function<cplx(double)>& f, double ymin, double ymax, cplx z,
           double h, const FBIOptions& opts = {});

struct GapReport {
    double max_deviation = 0.0;  // worst |gap - expected| over the samples
    bool ok = false;
};
// gap = (phi0 - phi1) / (Re z2)^2, expected 1/2 on Re z2 < 0 and 0 on Re z2 >= 0
GapReport halfspace_gap_check(const std::vector<std::pair<cplx, cplx>>& samples);

enum class PointClass { analytic_like, boundary_cut_like, undetermined };
std::string to_string(PointClass c);

struct IndicatorPoint {
    cplx z1, z2;
    double rate = 0.0;  // fitted slope of log|Tu| against 1/h
    PointClass cls = PointClass::undetermined;
};

// classifies each z by the proximity of the fitted rate to the phi4 = 0 branch
// versus the phi3(z) branch; tolerance 25% of |phi3(z)|
std::vector<IndicatorPoint> analyticity_indicator(const BoxFunction& u,
                                                  const std::vector<std::pair<cplx, cplx>>& zgrid,
                                                  const std::vector<double>& h_ladder,
                                                  const FBIOptions& opts = {});

}  // namespace dnlab
