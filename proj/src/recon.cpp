#include "dnlab/recon.hpp"

#include <cmath>

namespace dnlab {

namespace {

// Dirichlet interpolation kernel for M uniform points on [0, 2pi)
double trig_kernel(double x, int M) {
    double s = std::sin(0.5 * x);
    if (std::abs(s) < 1e-14) return 1.0;
    if (M % 2 == 1) return std::sin(0.5 * M * x) / (M * s);
    return std::sin(0.5 * M * x) / (M * std::tan(0.5 * x));
}

}  // namespace

AnalyticProfile BasisSpec::element(int b) const {
    int nm = int(depth_monomials.size());
    if (b < 0 || b >= size()) throw std::invalid_argument("BasisSpec: element index");
    int j = tangential_modes[b / nm];
    int m = depth_monomials[b % nm];
    auto env = envelope;
    return separable_profile(j, [m, env](double y) { return std::pow(y, m) * env(y); });
}

CMat build_linear_map(const AnalyticProfile& V, const BasisSpec& basis,
                      const ProbeLayout& probes, const HalfStrip& g) {
    int B = basis.size();
    if (B == 0) throw std::invalid_argument("build_linear_map: empty basis");
    if (probes.boundary_points.empty() || probes.frequencies.empty())
        throw std::invalid_argument("build_linear_map: empty probe layout");

    // Gram rank check of the basis on this grid (weighted discrete L^2)
    int N = g.n_boundary_modes, D = g.n_depth_points;
    CMat samples(N * D, B);
    for (int b = 0; b < B; ++b) {
        GridField f = sample_profile(basis.element(b), g);
        for (int p = 0; p < N; ++p)
            for (int i = 0; i < D; ++i)
                samples(p * D + i, b) = f.values(p, i) * std::sqrt(g.wdepth[i] * g.boundary_weight());
    }
    CMat gram = samples.adjoint() * samples;
    Eigen::BDCSVD<CMat> gsvd(gram);
    Vec gs = gsvd.singularValues();
    if (!(gs(gs.size() - 1) > 1e-10 * gs(0)))
        throw std::invalid_argument(
            "build_linear_map: basis functions linearly dependent on this grid");

    int P = int(probes.boundary_points.size()), F = int(probes.frequencies.size());
    CMat out(P * F, B);
    for (int b = 0; b < B; ++b) {
        DiscreteOperator ldot = linearized_dn(V, basis.element(b), g);
        SymbolTable t = build_symbol_table(ldot, probes.boundary_points,
                                           probes.frequencies, probes.probe);
        for (int p = 0; p < P; ++p)
            for (int f = 0; f < F; ++f) out(p * F + f, b) = t.values(p, f);
    }
    return out;
}

InjectivityReport injectivity_report(const CMat& m) {
    if (m.rows() == 0 || m.cols() == 0)
        throw std::invalid_argument("injectivity_report: empty matrix");
    InjectivityReport rep;
    rep.rows = int(m.rows());
    rep.cols = int(m.cols());
    Eigen::BDCSVD<CMat> svd(m);
    rep.singular_values = svd.singularValues();
    double smax = rep.singular_values(0);
    double smin = rep.singular_values(rep.singular_values.size() - 1);
    rep.condition_number =
        smin > 0.0 ? smax / smin : std::numeric_limits<double>::infinity();
    rep.rank_deficient = rep.rows < rep.cols || !(smin > 1e-12 * smax);
    return rep;
}

ReconResult reconstruct_q(const DiscreteOperator& ldot,
                          const std::vector<double>& yprime_grid,
                          const ReconParams& params) {
    if (yprime_grid.empty()) throw std::invalid_argument("reconstruct_q: empty y' grid");
    int M = int(yprime_grid.size());
    if (M > 1) {
        double step = 2.0 * pi / M;
        for (int p = 0; p < M; ++p)
            if (std::abs(yprime_grid[p] - yprime_grid[0] - p * step) > 1e-9)
                throw std::invalid_argument(
                    "reconstruct_q: y' grid must be a single point or uniform on [0, 2pi)");
    }

    SymbolTable table = build_symbol_table(ldot, yprime_grid, params.frequencies,
                                           params.probe);
    std::vector<AsymptoticSeries> series =
        extract_coefficients(table, params.k_max, params.peel);

    ReconResult res;
    res.radius = params.radius;
    for (int p = 0; p < M; ++p) {
        ReconPoint pt;
        pt.yprime = yprime_grid[p];
        pt.symbol_series = series[p];
        pt.clas = validate_clas(series[p], params.clas_C);
        if (!pt.clas.pass)
            throw NumericalError("reconstruct_q: cl.a.s. gate failed at y' = " +
                                 std::to_string(pt.yprime) + " (fitted C " +
                                 std::to_string(pt.clas.fitted_C) + ", requested " +
                                 std::to_string(params.clas_C) + ")");
        // sigma(tau) = Lq(2tau): c_{k+1} = q^{(k)}(0) 2^{-(k+1)}
        pt.taylor.resize(series[p].coefficients.size());
        for (size_t k = 0; k < pt.taylor.size(); ++k)
            pt.taylor[k] = std::pow(2.0, double(k + 1)) * series[p].coefficients[k];
        AsymptoticSeries ts;
        ts.coefficients = pt.taylor;
        ts.offset = 0;
        ts.growth_constant = fit_growth_constant(ts).c_tilde;
        pt.profile = borel_resum(ts, params.radius);
        res.points.push_back(std::move(pt));
    }

    std::vector<double> ys = yprime_grid;
    std::vector<BorelSum> profiles;
    for (const auto& pt : res.points) profiles.push_back(pt.profile);
    res.estimate.evaluator = [ys, profiles, M](double yp, double yn) {
        if (M == 1) return profiles[0](yn);
        cplx acc = 0.0;
        for (int p = 0; p < M; ++p) acc += trig_kernel(yp - ys[p], M) * profiles[p](yn);
        return acc;
    };
    res.estimate.support_depth = params.radius;
    return res;
}

}  // namespace dnlab
