#pragma once
// End-to-end harness: finite basis -> linearized DN -> symbol samples as a linear
// map (injectivity via SVD), and per-point Laplace/Borel reconstruction of q.

#include <vector>

#include "dnlab/symbol.hpp"

namespace dnlab {

struct BasisSpec {
    std::vector<int> tangential_modes;   // j in e^{i j y'}
    std::vector<int> depth_monomials;    // m in y_n^m
    std::function<cplx(double)> envelope = [](double y) { return std::exp(-y); };

    int size() const { return int(tangential_modes.size() * depth_monomials.size()); }
    // element b in j-major, m-minor order
    AnalyticProfile element(int b) const;
};

struct ProbeLayout {
    std::vector<double> boundary_points;
    std::vector<double> frequencies;
    ProbeParams probe;

    int count() const { return int(boundary_points.size() * frequencies.size()); }
};

// rows: probe samples (point-major, frequency-minor); columns: basis elements
CMat build_linear_map(const AnalyticProfile& V, const BasisSpec& basis,
                      const ProbeLayout& probes, const HalfStrip& g);

struct InjectivityReport {
    Vec singular_values;  // descending
    double condition_number = 0.0;
    bool rank_deficient = false;
    int rows = 0, cols = 0;
};

InjectivityReport injectivity_report(const CMat& m);

struct ReconParams {
    std::vector<double> frequencies = default_frequency_ladder();
    int k_max = 11;
    double radius = 0.3;
    ProbeParams probe = exact_probe();
    PeelOptions peel;
    double clas_C = 8.0;  // gate for validate_clas before resummation
};

struct ReconPoint {
    double yprime = 0.0;
    AsymptoticSeries symbol_series;  // peeled c_k, sigma ~ sum c_k tau^{-k}
    std::vector<cplx> taylor;        // q^{(k)}(0) = 2^{k+1} c_{k+1}
    BorelSum profile;
    ClasReport clas;
};

struct ReconResult {
    std::vector<ReconPoint> points;
    AnalyticProfile estimate;  // q~(y', y_n) on [0, radius]
    double radius = 0.0;
};

// per-boundary-point pipeline: symbol table -> coefficient peeling -> cl.a.s.
// gate -> Borel resummation; the y' grid must be a single point or uniform on
// [0, 2pi) so the estimate can interpolate trigonometrically
ReconResult reconstruct_q(const DiscreteOperator& ldot,
                          const std::vector<double>& yprime_grid,
                          const ReconParams& params = {});

}  // namespace dnlab
