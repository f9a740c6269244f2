#include "dnlab/forward.hpp"

#include <cmath>
#include <map>

namespace dnlab {

namespace {

constexpr int kDenseLimit = 5000;  // NT guard for the dense route

void check_pivots(const Eigen::PartialPivLU<CMat>& lu, const std::string& what) {
    Vec mags = lu.matrixLU().diagonal().cwiseAbs();
    double mx = mags.maxCoeff(), mn = mags.minCoeff();
    if (!(mn > 1e-12 * mx))
        throw NumericalError("Dirichlet spectrum collision in " + what +
                             ": near-singular interior block, pivot ratio " +
                             std::to_string(mn / mx));
}

// spectral second derivative in y' on the periodic point grid (real circulant)
Mat tangential_d2(const HalfStrip& g) {
    int N = g.n_boundary_modes;
    Mat out(N, N);
    for (int p = 0; p < N; ++p)
        for (int q = 0; q < N; ++q) {
            double acc = 0.0;
            for (int k = 0; k < N; ++k) {
                double j = g.mode(k);
                acc += -j * j * std::cos(j * (g.boundary_point(p) - g.boundary_point(q)));
            }
            out(p, q) = acc / N;
        }
    return out;
}

struct DenseCore {
    Eigen::PartialPivLU<CMat> lu;  // factor of the BC-modified operator
    int N = 0, D = 0;
};

DenseCore dense_core(const AnalyticProfile& V, const HalfStrip& g) {
    int N = g.n_boundary_modes, D = g.n_depth_points, NT = N * D;
    if (NT > kDenseLimit)
        throw std::invalid_argument("dense forward route limited to N*D <= " +
                                    std::to_string(kDenseLimit) +
                                    "; use the mode fast path for large grids");
    GridField vf = sample_profile(V, g);
    Mat d2p = tangential_d2(g);
    CMat A = CMat::Zero(NT, NT);
    for (int p = 0; p < N; ++p)
        for (int q = 0; q < N; ++q)
            for (int i = 0; i < D; ++i)
                A(p * D + i, q * D + i) += d2p(p, q);
    for (int p = 0; p < N; ++p)
        for (int i = 0; i < D; ++i)
            for (int k = 0; k < D; ++k)
                A(p * D + i, p * D + k) += g.d2(i, k);
    for (int p = 0; p < N; ++p)
        for (int i = 0; i < D; ++i)
            A(p * D + i, p * D + i) -= vf.values(p, i);
    // Dirichlet rows at y_n = 0 and y_n = L
    for (int p = 0; p < N; ++p)
        for (int i : {0, D - 1}) {
            A.row(p * D + i).setZero();
            A(p * D + i, p * D + i) = 1.0;
        }
    DenseCore core;
    core.N = N;
    core.D = D;
    core.lu = Eigen::PartialPivLU<CMat>(A);
    check_pivots(core.lu, "dense_forward");
    return core;
}

double op2norm(const CMat& m) {
    Eigen::BDCSVD<CMat> svd(m);
    return svd.singularValues()(0);
}

}  // namespace

DenseForward dense_forward(const AnalyticProfile& V, const HalfStrip& g) {
    DenseCore core = dense_core(V, g);
    int N = core.N, D = core.D, NT = N * D;
    DenseForward fw;
    fw.grid = &g;
    CMat rhsK = CMat::Zero(NT, N);
    for (int p = 0; p < N; ++p) rhsK(p * D, p) = 1.0;
    fw.K = core.lu.solve(rhsK);
    CMat rhsG = CMat::Zero(NT, NT);
    for (int p = 0; p < N; ++p)
        for (int i = 1; i < D - 1; ++i) rhsG(p * D + i, p * D + i) = 1.0;
    fw.G = core.lu.solve(rhsG);
    fw.S = CMat::Zero(N, NT);
    for (int p = 0; p < N; ++p)
        for (int i = 0; i < D; ++i) fw.S(p, p * D + i) = g.dn_row[i];
    fw.wfull.resize(NT);
    for (int p = 0; p < N; ++p)
        for (int i = 0; i < D; ++i) fw.wfull[p * D + i] = g.wdepth[i];
    return fw;
}

ForwardPair green_poisson(const AnalyticProfile& V, const HalfStrip& g) {
    DenseForward fw = dense_forward(V, g);
    ForwardPair pair;
    pair.green.matrix = std::move(fw.G);
    pair.green.domain_space = DiscreteOperator::Space::interior_field;
    pair.green.codomain_space = DiscreteOperator::Space::interior_field;
    pair.green.grid = &g;
    // K on mode coefficients: point-data columns composed with synthesis
    pair.poisson.matrix = fw.K * synthesis_matrix(g);
    pair.poisson.domain_space = DiscreteOperator::Space::boundary_modes;
    pair.poisson.codomain_space = DiscreteOperator::Space::interior_field;
    pair.poisson.grid = &g;
    return pair;
}

bool mode_zero_only(const AnalyticProfile& V) {
    if (!V.has_mode_profiles()) return false;
    for (const auto& [j, fn] : V.mode_profiles)
        if (j != 0) return false;
    return true;
}

CVec sample_mode0_depth(const AnalyticProfile& V, const HalfStrip& g) {
    CVec out = CVec::Zero(g.n_depth_points);
    for (const auto& [j, fn] : V.mode_profiles)
        if (j == 0)
            for (int i = 0; i < g.n_depth_points; ++i) out[i] += fn(g.depth[i]);
    return out;
}

CMat dirichlet_profiles(const HalfStrip& g, const CVec& V0) {
    int N = g.n_boundary_modes, D = g.n_depth_points;
    CMat out(D, N);
    std::map<int, CVec> cache;
    for (int k = 0; k < N; ++k) {
        int ja = std::abs(g.mode(k));
        auto it = cache.find(ja);
        if (it == cache.end()) {
            CMat A = g.d2.cast<cplx>();
            for (int i = 0; i < D; ++i) A(i, i) -= double(ja) * ja + V0[i];
            A.row(0).setZero();
            A(0, 0) = 1.0;
            A.row(D - 1).setZero();
            A(D - 1, D - 1) = 1.0;
            Eigen::PartialPivLU<CMat> lu(A);
            Vec mags = lu.matrixLU().diagonal().cwiseAbs();
            if (!(mags.minCoeff() > 1e-12 * mags.maxCoeff()))
                throw NumericalError("Dirichlet spectrum collision at mode " +
                                     std::to_string(ja) + ": pivot ratio " +
                                     std::to_string(mags.minCoeff() / mags.maxCoeff()));
            CVec rhs = CVec::Zero(D);
            rhs[0] = 1.0;
            it = cache.emplace(ja, lu.solve(rhs)).first;
        }
        out.col(k) = it->second;
    }
    return out;
}

CMat poisson_kernel_profiles(const HalfStrip& g) {
    int N = g.n_boundary_modes, D = g.n_depth_points;
    CMat out(D, N);
    for (int k = 0; k < N; ++k) {
        double a = std::abs(double(g.mode(k)));
        for (int i = 0; i < D; ++i) {
            double y = g.depth[i];
            if (a == 0.0)
                out(i, k) = 1.0 - y / g.L;
            else
                out(i, k) = std::exp(-a * y) * (1.0 - std::exp(-2.0 * a * (g.L - y))) /
                            (1.0 - std::exp(-2.0 * a * g.L));
        }
    }
    return out;
}

DiscreteOperator dn_map_from_profiles(const HalfStrip& g, const CMat& profiles) {
    int N = g.n_boundary_modes;
    DiscreteOperator op;
    op.matrix = CMat::Zero(N, N);
    CVec row = g.dn_row.cast<cplx>();
    for (int k = 0; k < N; ++k)
        op.matrix(k, k) = (row.array() * profiles.col(k).array()).sum();
    op.grid = &g;
    return op;
}

DiscreteOperator linearized_dn_from_profiles(const HalfStrip& g, const CMat& profiles,
                                             const AnalyticProfile& q) {
    int N = g.n_boundary_modes, D = g.n_depth_points;
    // tangential modes of q on depth nodes, rows in mode-index order
    CMat qhat;
    if (q.has_mode_profiles()) {
        qhat = CMat::Zero(N, D);
        for (const auto& [j, fn] : q.mode_profiles) {
            int row = g.index_of_mode(j);
            for (int i = 0; i < D; ++i) qhat(row, i) += fn(g.depth[i]);
        }
    } else {
        qhat = sample_profile(q, g, GridField::Indexing::mode).values;
    }
    // nonzero mode rows
    double top = qhat.cwiseAbs().maxCoeff();
    std::vector<int> live;
    for (int s = 0; s < N; ++s)
        if (qhat.row(s).cwiseAbs().maxCoeff() > 1e-15 * top) live.push_back(s);

    DiscreteOperator op;
    op.matrix = CMat::Zero(N, N);
    op.grid = &g;
    if (top == 0.0) return op;

    CMat wprof = profiles;  // weighted once: w_i k_j(y_i)
    for (int i = 0; i < D; ++i) wprof.row(i) *= g.wdepth[i];

    if (int(live.size()) <= 24) {
        for (int s : live)
            for (int jdx = 0; jdx < N; ++jdx) {
                int mdx = (jdx + s) % N;  // mode(m) - mode(j) == mode(s) modulo N
                cplx acc = 0.0;
                for (int i = 0; i < D; ++i)
                    acc += qhat(s, i) * wprof(i, jdx) * profiles(i, mdx);
                op.matrix(mdx, jdx) += acc;
            }
    } else {
        for (int mdx = 0; mdx < N; ++mdx)
            for (int jdx = 0; jdx < N; ++jdx) {
                int s = ((mdx - jdx) % N + N) % N;
                cplx acc = 0.0;
                for (int i = 0; i < D; ++i)
                    acc += qhat(s, i) * wprof(i, jdx) * profiles(i, mdx);
                op.matrix(mdx, jdx) = acc;
            }
    }
    return op;
}

DiscreteOperator dn_map(const AnalyticProfile& V, const HalfStrip& g) {
    if (mode_zero_only(V))
        return dn_map_from_profiles(g, dirichlet_profiles(g, sample_mode0_depth(V, g)));
    DenseForward fw = dense_forward(V, g);
    CMat lam_pt = fw.S * fw.K;
    CMat F = synthesis_matrix(g);
    // mode representation: F^{-1} = F^* / N for the unitary-scaled DFT
    CMat Finv = F.adjoint() / double(g.n_boundary_modes);
    DiscreteOperator op;
    op.matrix = Finv * lam_pt * F;
    op.grid = &g;
    return op;
}

double greens_identity_check(const AnalyticProfile& V, const HalfStrip& g) {
    DenseForward fw = dense_forward(V, g);
    int N = g.n_boundary_modes, D = g.n_depth_points, NT = N * D;
    CMat GN = fw.S * fw.G;
    CMat KtW = fw.K.transpose() * fw.wfull.asDiagonal();
    // fixed smooth probe family: Chebyshev degree <= 8 in depth, all modes in y'
    const int deg = 8;
    Vec x(D);
    for (int i = 0; i < D; ++i) x[i] = 1.0 - 2.0 * g.depth[i] / g.L;
    Mat P(D, deg + 1);
    for (int i = 0; i < D; ++i) {
        P(i, 0) = 1.0;
        if (deg >= 1) P(i, 1) = x[i];
        for (int m = 2; m <= deg; ++m) P(i, m) = 2.0 * x[i] * P(i, m - 1) - P(i, m - 2);
    }
    Vec wh = g.wdepth.cwiseSqrt();
    Mat Pw = wh.asDiagonal() * P;
    Eigen::HouseholderQR<Mat> qr(Pw);
    Mat Q = qr.householderQ() * Mat::Identity(D, deg + 1);
    Q = wh.cwiseInverse().asDiagonal() * Q;
    CMat Fm = synthesis_matrix(g) / std::sqrt(double(N));
    CMat B(NT, N * (deg + 1));
    for (int p = 0; p < N; ++p)
        for (int a = 0; a < N; ++a)
            for (int i = 0; i < D; ++i)
                for (int b = 0; b <= deg; ++b)
                    B(p * D + i, a * (deg + 1) + b) = Fm(p, a) * Q(i, b);
    CMat dif = (GN - KtW) * B;
    CMat ref = KtW * B;
    return op2norm(dif) / op2norm(ref);
}

DiscreteOperator linearized_dn(const AnalyticProfile& V, const AnalyticProfile& q,
                               const HalfStrip& g) {
    if (mode_zero_only(V)) {
        CVec V0 = sample_mode0_depth(V, g);
        // V = 0 has the kernel in closed form; discrete solves are kept for V != 0
        CMat profiles = (V0.cwiseAbs().maxCoeff() == 0.0)
                            ? poisson_kernel_profiles(g)
                            : dirichlet_profiles(g, V0);
        return linearized_dn_from_profiles(g, profiles, q);
    }
    DenseForward fw = dense_forward(V, g);
    GridField qf = sample_profile(q, g);
    int N = g.n_boundary_modes, D = g.n_depth_points, NT = N * D;
    CVec wq(NT);
    for (int p = 0; p < N; ++p)
        for (int i = 0; i < D; ++i) wq[p * D + i] = fw.wfull[p * D + i] * qf.values(p, i);
    CMat lam_pt = fw.K.transpose() * wq.asDiagonal() * fw.K;
    CMat F = synthesis_matrix(g);
    CMat Finv = F.adjoint() / double(N);
    DiscreteOperator op;
    op.matrix = Finv * lam_pt * F;
    op.grid = &g;
    return op;
}

}  // namespace dnlab
