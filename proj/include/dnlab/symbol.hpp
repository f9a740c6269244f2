#pragma once
// Semiclassical symbol of the linearized DN map along the ray xi' = tau * eta0'
// (eta0' = +1): windowed-exponential probes, symbol tables, coefficient peeling by
// polynomial extrapolation in 1/tau, and the classical-analytic-symbol validator.

#include <vector>

#include "dnlab/forward.hpp"
#include "dnlab/laplace.hpp"

namespace dnlab {

struct ProbeParams {
    double h = 0.0;               // semiclassical parameter; 0 slaves h = 1/tau
    double gaussian_width = 1.0;  // sigma_g of the cutoff in the sqrt(h)-scaled offset
    double cutoff_radius = 2.8;   // outer radius of the plateau cutoff (inf disables)

    bool has_gaussian() const { return std::isfinite(gaussian_width); }
    bool has_cutoff() const { return std::isfinite(cutoff_radius); }
    // pure periodic exponential; exact mode reading at integer tau
    bool exact() const { return !has_gaussian() && !has_cutoff(); }
};

inline ProbeParams exact_probe() {
    return {0.0, std::numeric_limits<double>::infinity(),
            std::numeric_limits<double>::infinity()};
}
inline ProbeParams plateau_probe(double rho = 2.8) {
    return {0.0, std::numeric_limits<double>::infinity(), rho};
}

struct SymbolTable {
    std::vector<double> boundary_points;
    std::vector<double> frequencies;  // strictly increasing, all >= 1
    CMat values;                      // point x frequency
    ProbeParams probe;
};

cplx raw_symbol(const DiscreteOperator& ldot, double yprime, double tau,
                const ProbeParams& probe = {});

SymbolTable build_symbol_table(const DiscreteOperator& ldot,
                               const std::vector<double>& boundary_points,
                               const std::vector<double>& frequencies,
                               const ProbeParams& probe = {});

struct PeelOptions {
    int order = 3;        // extrapolation order (order+1 ladder nodes per window)
    int stride = 2;       // index stride inside a window (ratio 2 on the default ladder)
    int slide_start = 3;  // first k at which the anchor starts sliding down
    int slide = 2;        // anchor decrement per k past slide_start
    int floor = 0;        // lowest anchor index
    int anchor = -1;      // fixed anchor for every k (>= 0 disables the schedule)
};

// interleaved octave ladders; stride-2 windows have exact frequency ratio 2
std::vector<double> default_frequency_ladder();

std::vector<AsymptoticSeries> extract_coefficients(const SymbolTable& table, int k_max,
                                                   const PeelOptions& opts = {});

struct ClasReport {
    double fitted_C = 0.0;      // smallest C with |q_k| <= C^{k+1} k^k over stored k
    bool growth_ok = false;     // fitted_C <= requested C
    bool finite_C = true;       // per-k constants not diverging at the tail
    double remainder_slope = 0.0;  // fitted slope of log residual vs tau
    bool remainder_ok = false;  // slope < 0
    bool pass = false;
};

ClasReport validate_clas(const AsymptoticSeries& series, double C);

}  // namespace dnlab
