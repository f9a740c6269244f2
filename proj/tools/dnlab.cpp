// Batch front-end: each subcommand reads one JSON config, runs an experiment,
// and writes plot-ready artifacts plus a .meta.json sidecar carrying the config
// hash. Identical configs produce byte-identical outputs.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dnlab/acceptance.hpp"
#include "dnlab/eikonal.hpp"
#include "dnlab/fbi.hpp"
#include "dnlab/recon.hpp"
#include "json.hpp"

using json = nlohmann::json;
using namespace dnlab;

namespace {

struct ConfigError {
    std::string msg;
};

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ConfigError{where + ": " + what};
}

// ---- config access with unknown-key rejection ------------------------------

void require_keys(const json& obj, const std::string& where,
                  std::initializer_list<const char*> allowed) {
    if (!obj.is_object()) fail(where, "expected an object");
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed)
            if (it.key() == k) {
                ok = true;
                break;
            }
        if (!ok) fail(where, "unknown key '" + it.key() + "'");
    }
}

const json* find(const json& obj, const char* key) {
    auto it = obj.find(key);
    return it == obj.end() ? nullptr : &*it;
}

double get_num(const json& obj, const std::string& where, const char* key, double dflt,
               double lo, double hi) {
    const json* v = find(obj, key);
    if (!v) return dflt;
    if (!v->is_number()) fail(where + "/" + key, "expected a number");
    double x = v->get<double>();
    if (!(x >= lo && x <= hi))
        fail(where + "/" + key, "value " + std::to_string(x) + " outside [" +
                                    std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return x;
}

int get_int(const json& obj, const std::string& where, const char* key, int dflt, int lo,
            int hi) {
    const json* v = find(obj, key);
    if (!v) return dflt;
    if (!v->is_number_integer()) fail(where + "/" + key, "expected an integer");
    long long x = v->get<long long>();
    if (x < lo || x > hi)
        fail(where + "/" + key, "value " + std::to_string(x) + " outside [" +
                                    std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return int(x);
}

std::string get_str(const json& obj, const std::string& where, const char* key,
                    const std::string& dflt) {
    const json* v = find(obj, key);
    if (!v) return dflt;
    if (!v->is_string()) fail(where + "/" + key, "expected a string");
    return v->get<std::string>();
}

std::vector<double> get_num_list(const json& obj, const std::string& where, const char* key,
                                 std::vector<double> dflt) {
    const json* v = find(obj, key);
    if (!v) return dflt;
    if (!v->is_array()) fail(where + "/" + key, "expected an array of numbers");
    std::vector<double> out;
    for (const auto& e : *v) {
        if (!e.is_number()) fail(where + "/" + key, "expected an array of numbers");
        out.push_back(e.get<double>());
    }
    return out;
}

std::vector<int> get_int_list(const json& obj, const std::string& where, const char* key,
                              std::vector<int> dflt) {
    const json* v = find(obj, key);
    if (!v) return dflt;
    if (!v->is_array()) fail(where + "/" + key, "expected an array of integers");
    std::vector<int> out;
    for (const auto& e : *v) {
        if (!e.is_number_integer()) fail(where + "/" + key, "expected an array of integers");
        out.push_back(e.get<int>());
    }
    return out;
}

// ---- domain blocks ----------------------------------------------------------

HalfStrip grid_from(const json& cfg) {
    json block = cfg.value("grid", json::object());
    require_keys(block, "/grid", {"modes", "depth", "depth_points", "rule"});
    int modes = get_int(block, "/grid", "modes", 96, 1, 4096);
    double depth = get_num(block, "/grid", "depth", 2.0, 1e-6, 1e3);
    int pts = get_int(block, "/grid", "depth_points", 96, 4, 4096);
    std::string rule = get_str(block, "/grid", "rule", "chebyshev");
    if (rule != "chebyshev" && rule != "uniform")
        fail("/grid/rule", "expected 'chebyshev' or 'uniform'");
    return make_grid(modes, depth, pts,
                     rule == "chebyshev" ? DepthRule::chebyshev : DepthRule::uniform);
}

AnalyticProfile profile_from(const json& cfg, const char* key) {
    json block = cfg.value(key, json{{"name", "zero"}});
    std::string where = std::string("/") + key;
    require_keys(block, where, {"name", "mode", "power", "amplitude", "rate"});
    std::string name = get_str(block, where, "name", "zero");
    double amp = get_num(block, where, "amplitude", 1.0, -1e6, 1e6);
    double rate = get_num(block, where, "rate", 1.0, 0.0, 1e3);
    int mode = get_int(block, where, "mode", 0, -2048, 2048);
    int power = get_int(block, where, "power", 0, 0, 64);
    if (name == "zero") return zero_profile();
    if (name == "exp")
        return separable_profile(
            mode, [amp, rate](double y) { return cplx(amp * std::exp(-rate * y), 0.0); });
    if (name == "cos_exp")
        return cosine_profile(
            mode, amp, [rate](double y) { return cplx(std::exp(-rate * y), 0.0); });
    if (name == "poly_exp")
        return separable_profile(mode, [amp, rate, power](double y) {
            return cplx(amp * std::pow(y, power) * std::exp(-rate * y), 0.0);
        });
    fail(where + "/name", "unknown profile '" + name + "'");
}

ProbeParams probe_from(const json& cfg) {
    json block = cfg.value("probe", json{{"kind", "exact"}});
    require_keys(block, "/probe", {"kind", "width", "cutoff", "h"});
    std::string kind = get_str(block, "/probe", "kind", "exact");
    if (kind == "exact") {
        require_keys(block, "/probe", {"kind"});
        return exact_probe();
    }
    if (kind == "plateau") {
        require_keys(block, "/probe", {"kind", "cutoff"});
        return plateau_probe(get_num(block, "/probe", "cutoff", 2.8, 1e-3, 1e3));
    }
    if (kind == "gaussian") {
        ProbeParams p;
        p.h = get_num(block, "/probe", "h", 0.0, 0.0, 1e3);
        p.gaussian_width = get_num(block, "/probe", "width", 1.0, 1e-3, 1e3);
        p.cutoff_radius = get_num(block, "/probe", "cutoff", 2.8, 1e-3, 1e3);
        return p;
    }
    fail("/probe/kind", "expected 'exact', 'gaussian', or 'plateau'");
}

// ---- deterministic writers --------------------------------------------------

uint64_t fnv1a64(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

struct Emitter {
    std::filesystem::path dir;
    std::string command;
    std::string config_hash;

    void write(const std::string& name, const std::string& content) const {
        std::ofstream f(dir / name, std::ios::binary);
        if (!f) fail("--out", "cannot write " + (dir / name).string());
        f << content;
        json meta = {{"command", command}, {"config_hash", config_hash}, {"file", name}};
        std::ofstream m(dir / (name + ".meta.json"), std::ios::binary);
        m << meta.dump(2) << "\n";
    }
};

std::string matrix_csv(const CMat& m) {
    std::string out = "row,col,re,im\n";
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            out += std::to_string(i) + "," + std::to_string(j) + "," + g17(m(i, j).real()) +
                   "," + g17(m(i, j).imag()) + "\n";
    return out;
}

json clas_json(const ClasReport& rep) {
    return {{"fitted_C", rep.fitted_C},         {"growth_ok", rep.growth_ok},
            {"finite_C", rep.finite_C},         {"remainder_slope", rep.remainder_slope},
            {"remainder_ok", rep.remainder_ok}, {"pass", rep.pass}};
}

// ---- subcommands ------------------------------------------------------------

int cmd_forward(const json& cfg, const Emitter& em) {
    require_keys(cfg, "/", {"grid", "potential", "perturbation"});
    HalfStrip g = grid_from(cfg);
    AnalyticProfile V = profile_from(cfg, "potential");
    AnalyticProfile q = profile_from(cfg, "perturbation");
    DiscreteOperator lam = dn_map(V, g);
    DiscreteOperator ldot = linearized_dn(V, q, g);
    double resid = greens_identity_check(V, g);
    em.write("dn_map.csv", matrix_csv(lam.matrix));
    em.write("dn_dot.csv", matrix_csv(ldot.matrix));
    json rep = {{"green_identity_residual", resid},
                {"dn_map_max_abs", lam.matrix.cwiseAbs().maxCoeff()},
                {"dn_dot_max_abs", ldot.matrix.cwiseAbs().maxCoeff()},
                {"modes", g.n_boundary_modes},
                {"depth_points", g.n_depth_points}};
    em.write("forward.json", rep.dump(2) + "\n");
    return 0;
}

SymbolTable table_from(const json& cfg, const char* block_key) {
    HalfStrip g = grid_from(cfg);
    AnalyticProfile V = profile_from(cfg, "potential");
    AnalyticProfile q = profile_from(cfg, "perturbation");
    ProbeParams probe = probe_from(cfg);
    json block = cfg.value(block_key, json::object());
    std::string where = std::string("/") + block_key;
    require_keys(block, where, {"boundary_points", "frequencies", "k_max", "clas_c", "radius",
                                "samples"});
    std::vector<double> pts = get_num_list(block, where, "boundary_points", {0.0});
    std::vector<double> freqs =
        get_num_list(block, where, "frequencies", default_frequency_ladder());
    DiscreteOperator ldot = linearized_dn(V, q, g);
    return build_symbol_table(ldot, pts, freqs, probe);
}

int cmd_symbol(const json& cfg, const Emitter& em) {
    require_keys(cfg, "/", {"grid", "potential", "perturbation", "probe", "symbol"});
    SymbolTable t = table_from(cfg, "symbol");
    std::string csv = "y_prime,tau,re,im\n";
    for (size_t p = 0; p < t.boundary_points.size(); ++p)
        for (size_t f = 0; f < t.frequencies.size(); ++f)
            csv += g17(t.boundary_points[p]) + "," + g17(t.frequencies[f]) + "," +
                   g17(t.values(p, f).real()) + "," + g17(t.values(p, f).imag()) + "\n";
    em.write("symbol_table.csv", csv);
    return 0;
}

int cmd_laplace_fit(const json& cfg, const Emitter& em) {
    require_keys(cfg, "/", {"grid", "potential", "perturbation", "probe", "fit"});
    SymbolTable t = table_from(cfg, "fit");
    json block = cfg.value("fit", json::object());
    int k_max = get_int(block, "/fit", "k_max", 6, 1, 64);
    double clas_c = get_num(block, "/fit", "clas_c", 8.0, 1e-6, 1e6);
    auto series = extract_coefficients(t, k_max);
    json points = json::array();
    for (size_t p = 0; p < series.size(); ++p) {
        json coeffs = json::array();
        for (const cplx& c : series[p].coefficients)
            coeffs.push_back({{"re", c.real()}, {"im", c.imag()}});
        points.push_back({{"y_prime", t.boundary_points[p]},
                          {"coefficients", coeffs},
                          {"growth_constant", series[p].growth_constant},
                          {"clas", clas_json(validate_clas(series[p], clas_c))}});
    }
    json rep = {{"k_max", k_max}, {"points", points}};
    em.write("laplace_fit.json", rep.dump(2) + "\n");
    return 0;
}

int cmd_borel_reconstruct(const json& cfg, const Emitter& em) {
    require_keys(cfg, "/", {"grid", "potential", "perturbation", "probe", "recon"});
    HalfStrip g = grid_from(cfg);
    AnalyticProfile V = profile_from(cfg, "potential");
    AnalyticProfile q = profile_from(cfg, "perturbation");
    json block = cfg.value("recon", json::object());
    require_keys(block, "/recon", {"boundary_points", "frequencies", "k_max", "radius",
                                   "clas_c", "samples"});
    ReconParams params;
    params.probe = probe_from(cfg);
    params.frequencies =
        get_num_list(block, "/recon", "frequencies", default_frequency_ladder());
    params.k_max = get_int(block, "/recon", "k_max", 11, 1, 64);
    params.radius = get_num(block, "/recon", "radius", 0.3, 1e-6, 1e3);
    params.clas_C = get_num(block, "/recon", "clas_c", 8.0, 1e-6, 1e6);
    std::vector<double> pts = get_num_list(block, "/recon", "boundary_points", {0.0});
    int samples = get_int(block, "/recon", "samples", 61, 2, 100000);

    DiscreteOperator ldot = linearized_dn(V, q, g);
    ReconResult r = reconstruct_q(ldot, pts, params);

    std::string csv = "y_prime,y,re,im\n";
    for (const auto& pt : r.points)
        for (int i = 0; i < samples; ++i) {
            double y = r.radius * i / (samples - 1);
            cplx v = pt.profile(y);
            csv += g17(pt.yprime) + "," + g17(y) + "," + g17(v.real()) + "," +
                   g17(v.imag()) + "\n";
        }
    em.write("profile.csv", csv);

    json points = json::array();
    for (const auto& pt : r.points) {
        json taylor = json::array();
        for (const cplx& c : pt.taylor) taylor.push_back({{"re", c.real()}, {"im", c.imag()}});
        points.push_back({{"y_prime", pt.yprime},
                          {"taylor", taylor},
                          {"growth_constant", pt.symbol_series.growth_constant},
                          {"clas", clas_json(pt.clas)}});
    }
    json rep = {{"radius", r.radius}, {"points", points}};
    em.write("recon.json", rep.dump(2) + "\n");
    return 0;
}

int cmd_injectivity(const json& cfg, const Emitter& em) {
    require_keys(cfg, "/", {"grid", "potential", "probe", "basis", "probes"});
    HalfStrip g = grid_from(cfg);
    AnalyticProfile V = profile_from(cfg, "potential");
    json bb = cfg.value("basis", json::object());
    require_keys(bb, "/basis", {"tangential_modes", "depth_monomials", "envelope_rate"});
    BasisSpec basis;
    basis.tangential_modes = get_int_list(bb, "/basis", "tangential_modes", {0, 1, 2});
    basis.depth_monomials = get_int_list(bb, "/basis", "depth_monomials", {0, 1, 2});
    double erate = get_num(bb, "/basis", "envelope_rate", 1.0, 0.0, 1e3);
    basis.envelope = [erate](double y) { return cplx(std::exp(-erate * y), 0.0); };
    json pb = cfg.value("probes", json::object());
    require_keys(pb, "/probes", {"boundary_points", "frequencies"});
    ProbeLayout probes;
    probes.boundary_points = get_num_list(pb, "/probes", "boundary_points",
                                          {0.0, 2.0 * pi / 5.0, 4.0 * pi / 5.0,
                                           6.0 * pi / 5.0, 8.0 * pi / 5.0});
    probes.frequencies = get_num_list(pb, "/probes", "frequencies", {8, 16, 32, 64, 128});
    probes.probe = probe_from(cfg);

    CMat m = build_linear_map(V, basis, probes, g);
    InjectivityReport rep = injectivity_report(m);
    json sv = json::array();
    for (int i = 0; i < rep.singular_values.size(); ++i) sv.push_back(rep.singular_values(i));
    json out = {{"rows", rep.rows},
                {"cols", rep.cols},
                {"singular_values", sv},
                {"condition_number", rep.condition_number},
                {"rank_deficient", rep.rank_deficient}};
    em.write("injectivity.json", out.dump(2) + "\n");
    return 0;
}

int cmd_eikonal(const json& cfg, const Emitter& em) {
    require_keys(cfg, "/", {"model", "jet", "box"});
    json mb = cfg.value("model", json::object());
    require_keys(mb, "/model", {"name", "eps", "base"});
    std::string name = get_str(mb, "/model", "name", "constant");
    double eps = get_num(mb, "/model", "eps", 0.1, -10.0, 10.0);
    double base = get_num(mb, "/model", "base", 0.0, -1e3, 1e3);
    json jb = cfg.value("jet", json::object());
    require_keys(jb, "/jet", {"order", "xi"});
    int order = get_int(jb, "/jet", "order", 6, 1, 64);
    double xi = get_num(jb, "/jet", "xi", 1.0, -1e6, 1e6);
    if (xi == 0.0) fail("/jet/xi", "ray coordinate must be nonzero");

    SymbolModel model;
    if (name == "constant")
        model = constant_symbol_model(order);
    else if (name == "poly")
        model = poly_symbol_model(eps, order, base);
    else if (name == "curved")
        model = curved_symbol_model(eps, order, base);
    else
        fail("/model/name", "expected 'constant', 'poly', or 'curved'");

    PhaseJet jet = solve_phase_jet(model, xi, order);

    json bb = cfg.value("box", json::object());
    require_keys(bb, "/box", {"u_half", "v_max", "nu", "nv"});
    SampleBox box;
    box.u_half = get_num(bb, "/box", "u_half", 0.1, 1e-9, 1e3);
    box.v_max = get_num(bb, "/box", "v_max", 0.1, 1e-9, 1e3);
    box.nu = get_int(bb, "/box", "nu", 21, 2, 1000);
    box.nv = get_int(bb, "/box", "nv", 20, 1, 1000);
    PsiBounds bounds = psi_bounds_check(jet, box);

    json coeffs = json::array();
    for (int a = 0; a <= jet.phi.order; ++a)
        for (int b = 0; b <= jet.phi.order; ++b) {
            cplx c = jet.phi.at(a, b);
            if (std::abs(c) > 0.0)
                coeffs.push_back({{"u_power", a}, {"v_power", b}, {"re", c.real()},
                                  {"im", c.imag()}});
        }
    json rep = {{"model", name},
                {"xi", xi},
                {"order", order},
                {"phi", coeffs},
                {"psi_bounds", {{"c1", bounds.c1}, {"c2", bounds.c2}, {"c3", bounds.c3},
                                {"ok", bounds.ok}}}};
    em.write("eikonal.json", rep.dump(2) + "\n");

    std::string csv = "u,v,residual_abs\n";
    for (int i = 0; i < box.nu; ++i)
        for (int j = 1; j <= box.nv; ++j) {
            double u = -box.u_half + 2.0 * box.u_half * i / (box.nu - 1);
            double v = box.v_max * j / box.nv;
            csv += g17(u) + "," + g17(v) + "," +
                   g17(std::abs(phase_residual(model, jet, u, v))) + "\n";
        }
    em.write("eikonal_residuals.csv", csv);
    return 0;
}

int cmd_fbi(const json& cfg, const Emitter& em) {
    require_keys(cfg, "/", {"function", "indicator"});
    json fb = cfg.value("function", json::object());
    require_keys(fb, "/function",
                 {"name", "y1min", "y1max", "y2min", "y2max", "rate"});
    std::string name = get_str(fb, "/function", "name", "gauss");
    BoxFunction u;
    u.y1min = get_num(fb, "/function", "y1min", -6.0, -1e3, 1e3);
    u.y1max = get_num(fb, "/function", "y1max", 6.0, -1e3, 1e3);
    u.y2min = get_num(fb, "/function", "y2min", name == "cut" ? 0.0 : -6.0, -1e3, 1e3);
    u.y2max = get_num(fb, "/function", "y2max", name == "cut" ? 8.0 : 6.0, -1e3, 1e3);
    if (!(u.y1min < u.y1max) || !(u.y2min < u.y2max))
        fail("/function", "box must have positive extent");
    double rate = get_num(fb, "/function", "rate", 1.0, 0.0, 1e3);
    if (name == "gauss")
        u.f = [](double a, double b) { return cplx(std::exp(-0.5 * (a * a + b * b)), 0.0); };
    else if (name == "cut")
        u.f = [rate](double, double b) { return cplx(std::exp(-rate * b), 0.0); };
    else
        fail("/function/name", "expected 'gauss' or 'cut'");

    json ib = cfg.value("indicator", json::object());
    require_keys(ib, "/indicator", {"points", "h_ladder"});
    const json* pl = find(ib, "points");
    std::vector<std::pair<cplx, cplx>> zgrid;
    if (pl) {
        if (!pl->is_array()) fail("/indicator/points", "expected an array of 4-vectors");
        for (const auto& e : *pl) {
            if (!e.is_array() || e.size() != 4)
                fail("/indicator/points", "each point is [z1re, z1im, z2re, z2im]");
            zgrid.push_back({cplx(e[0].get<double>(), e[1].get<double>()),
                             cplx(e[2].get<double>(), e[3].get<double>())});
        }
    } else {
        zgrid = {{cplx(0, 0), cplx(-0.5, 0)}, {cplx(0, 0), cplx(0.5, 0)}};
    }
    std::vector<double> ladder =
        get_num_list(ib, "/indicator", "h_ladder", {0.02, 0.01, 0.005});

    auto pts = analyticity_indicator(u, zgrid, ladder);
    std::string csv = "z1re,z1im,z2re,z2im,rate,class\n";
    for (const auto& p : pts)
        csv += g17(p.z1.real()) + "," + g17(p.z1.imag()) + "," + g17(p.z2.real()) + "," +
               g17(p.z2.imag()) + "," + g17(p.rate) + "," + to_string(p.cls) + "\n";
    em.write("fbi_indicator.csv", csv);
    return 0;
}

int cmd_verify(const json& cfg, const Emitter& em) {
    require_keys(cfg, "/", {});
    std::ostringstream lines;
    auto results = run_acceptance(lines);
    std::cout << lines.str();
    em.write("acceptance.txt", lines.str());
    if (!all_passed(results)) {
        int failed = 0;
        for (const auto& r : results)
            if (!r.pass) ++failed;
        std::cout << failed << " criteria failed\n";
        return 3;
    }
    std::cout << "all " << results.size() << " criteria passed\n";
    return 0;
}

json load_config(const std::string& path) {
    if (path.empty()) return json::object();
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ConfigError{path + ": cannot open config"};
    std::stringstream ss;
    ss << f.rdbuf();
    std::string text = ss.str();
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        size_t line = 1;
        for (size_t i = 0; i < e.byte && i < text.size(); ++i)
            if (text[i] == '\n') ++line;
        throw ConfigError{path + ":" + std::to_string(line) + ": " + e.what()};
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical laboratory for the linearized Dirichlet-to-Neumann problem"};
    app.require_subcommand(1);

    struct SubSpec {
        const char* name;
        const char* desc;
        int (*run)(const json&, const Emitter&);
        bool config_required;
    };
    const SubSpec specs[] = {
        {"forward", "build the DN map and its linearization, report the Green identity",
         cmd_forward, true},
        {"symbol", "sample the linearized DN symbol on a frequency ladder", cmd_symbol, true},
        {"laplace-fit", "peel asymptotic coefficients and fit growth constants",
         cmd_laplace_fit, true},
        {"borel-reconstruct", "reconstruct the perturbation profile by Borel resummation",
         cmd_borel_reconstruct, true},
        {"injectivity", "singular spectrum of the finite basis probe map", cmd_injectivity,
         true},
        {"eikonal", "solve the complex eikonal jet and check the phase bounds", cmd_eikonal,
         true},
        {"fbi", "classify points by the FBI transform h-rate", cmd_fbi, true},
        {"verify", "run the acceptance suite", cmd_verify, false},
    };

    std::string config_path, out_dir;
    int seed = 0;  // accepted but unused: the core is deterministic
    for (const auto& s : specs) {
        CLI::App* sub = app.add_subcommand(s.name, s.desc);
        auto* copt = sub->add_option("--config", config_path, "experiment config (JSON)");
        if (s.config_required) copt->required();
        sub->add_option("--out", out_dir, "output directory")->required();
        sub->add_option("--seed", seed, "reserved; no randomness in the core");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const SubSpec* chosen = nullptr;
    for (const auto& s : specs)
        if (app.got_subcommand(s.name)) chosen = &s;
    if (!chosen) return 2;

    try {
        json cfg = load_config(config_path);
        std::error_code ec;
        std::filesystem::create_directories(out_dir, ec);
        if (ec) throw ConfigError{"--out " + out_dir + ": " + ec.message()};
        Emitter em;
        em.dir = out_dir;
        em.command = chosen->name;
        char hex[17];
        std::snprintf(hex, sizeof hex, "%016llx",
                      (unsigned long long)fnv1a64(std::string(chosen->name) + "\n" +
                                                  cfg.dump()));
        em.config_hash = hex;
        return chosen->run(cfg, em);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.msg << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    }
}
