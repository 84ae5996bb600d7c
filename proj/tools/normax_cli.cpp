// Command line front end: exact norm maximization, beta-approximation,
// clique reduction instances, radius queries and construction checks.
// All numeric output is rational "num/den" strings; exit code 0 means
// success or YES, 1 a NO decision, 2 an error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "normax/approx_decider.hpp"
#include "normax/ball_approx.hpp"
#include "normax/errors.hpp"
#include "normax/gadget.hpp"
#include "normax/io.hpp"
#include "normax/normmax.hpp"
#include "normax/radii.hpp"

using nlohmann::json;
using namespace normax;

namespace {

int dim_cap_from_env() {
    if (const char* cap = std::getenv("NORMMAX_DIM_CAP")) {
        int v = std::atoi(cap);
        if (v > 0) return v;
    }
    return kDefaultDimCap;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream ss;
    ss << std::hex << h;
    return ss.str();
}

json witness_json(const RatVec& w) {
    json arr = json::array();
    for (const auto& x : w) arr.push_back(to_fraction_string(x));
    return arr;
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact p-norm maximization over H-polytopes"};
    app.require_subcommand(1);

    std::string poly_file, graph_file, vectors_file, out_file;
    std::string method = "exact", which, mode, what;
    std::string gamma_str;
    int p = 2, beta = 2;
    long k = 2, n_arg = 8;
    std::size_t ball_dim = 2;
    bool do_decide = false;

    auto* c_normmax = app.add_subcommand("normmax", "maximize ||x||_p^p over an H-polytope");
    c_normmax->add_option("--poly", poly_file)->required();
    c_normmax->add_option("--p", p)->required();
    c_normmax->add_option("--gamma", gamma_str);
    c_normmax->add_option("--method", method)->check(CLI::IsMember({"exact", "l1"}));

    auto* c_approx = app.add_subcommand("approx", "beta-approximation of the norm maximum");
    c_approx->add_option("--poly", poly_file)->required();
    c_approx->add_option("--p", p)->required();
    c_approx->add_option("--beta", beta)->required();

    auto* c_reduce = app.add_subcommand("reduce", "build a clique reduction instance");
    c_reduce->add_option("--graph", graph_file)->required();
    c_reduce->add_option("--k", k)->required();
    c_reduce->add_option("--p", p)->required();
    c_reduce->add_option("--out", out_file)->required();
    c_reduce->add_flag("--decide", do_decide);

    auto* c_radii = app.add_subcommand("radii", "radius functionals of symmetric polytopes");
    c_radii->add_option("--poly", poly_file)->required();
    c_radii->add_option("--p", p)->required();
    c_radii->add_option("--which", which)
        ->required()
        ->check(CLI::IsMember({"circumradius", "diameter", "inradius", "width"}));
    c_radii->add_option("--gamma", gamma_str);

    auto* c_parmax = app.add_subcommand("parmax", "norm maximum over a parallelotope");
    c_parmax->add_option("--vectors", vectors_file)->required();
    c_parmax->add_option("--mode", mode)->required()->check(CLI::IsMember({"01", "sym"}));
    c_parmax->add_option("--p", p)->required();

    auto* c_verify = app.add_subcommand("verify", "construction bound checks");
    c_verify->add_option("--what", what)
        ->required()
        ->check(CLI::IsMember({"gadget-bounds", "ball"}));
    c_verify->add_option("--n", n_arg);
    c_verify->add_option("--p", p)->required();
    c_verify->add_option("--beta", beta);
    c_verify->add_option("--d", ball_dim);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::ostringstream ss;
        app.exit(e, ss, ss);
        std::cerr << ss.str();
        return 2;
    }

    const int cap = dim_cap_from_env();
    Timer timer;
    json out;
    {
        std::ostringstream echo;
        for (int i = 1; i < argc; ++i) echo << (i > 1 ? " " : "") << argv[i];
        out["command"] = echo.str();
    }

    int exit_code = 0;
    try {
        if (*c_normmax) {
            std::string text = slurp(poly_file);
            out["inputs_digest"] = fnv1a_hex(text);
            HPolytope P = parse_hpolytope(text);
            NormmaxResult r = method == "l1" ? normmax1(P, cap) : exact_normmax(P, p, cap);
            out["value"] = to_fraction_string(r.value);
            out["witness"] = witness_json(r.witness);
            if (!gamma_str.empty()) {
                bool yes = r.value >= parse_rational(gamma_str);
                out["decision"] = yes;
                exit_code = yes ? 0 : 1;
            }
        } else if (*c_approx) {
            std::string text = slurp(poly_file);
            out["inputs_digest"] = fnv1a_hex(text);
            HPolytope P = parse_hpolytope(text);
            BetaApproxResult r = beta_approx_normmax(P, p, beta);
            out["witness"] = witness_json(r.witness);
            out["value"] = to_fraction_string(pnorm_pow(r.witness, p));
            out["guarantee"] = to_fraction_string(r.guarantee);
            out["upper_bound"] = to_fraction_string(r.upper);
            out["ball_facets"] = r.ball_facets;
        } else if (*c_reduce) {
            std::string text = slurp(graph_file);
            out["inputs_digest"] = fnv1a_hex(text);
            Graph G = parse_dimacs(text);
            GadgetInstance inst = build_gadget(G, static_cast<std::size_t>(k), p);
            {
                std::ofstream poly_out(out_file);
                if (!poly_out) throw Error("cannot write '" + out_file + "'");
                poly_out << serialize_polytope(inst.polytope);
                std::ofstream side(out_file + ".json");
                if (!side) throw Error("cannot write '" + out_file + ".json'");
                side << gadget_sidecar_json(inst) << "\n";
            }
            out["n_padded"] = inst.n_padded;
            out["dimension"] = inst.polytope.dim;
            out["rows"] = inst.polytope.rows.size();
            out["U"] = to_fraction_string(inst.U);
            out["eps_bar"] = to_fraction_string(inst.eps_bar);
            out["yes_threshold"] = to_fraction_string(inst.yes_threshold);
            out["no_threshold"] = to_fraction_string(inst.no_threshold);
            if (do_decide) {
                bool yes = decide_clique_via_normmax(inst, cap);
                out["decision"] = yes;
                exit_code = yes ? 0 : 1;
            }
        } else if (*c_radii) {
            std::string text = slurp(poly_file);
            out["inputs_digest"] = fnv1a_hex(text);
            AnyPolytope P = parse_polytope(text);
            if (which == "circumradius" || which == "diameter") {
                if (!std::holds_alternative<HPolytope>(P))
                    throw Error("circumradius/diameter expect an H-polytope file");
                RadiusKind kind = which == "circumradius" ? RadiusKind::circumradius
                                                          : RadiusKind::half_diameter;
                Rational v = radius_h(std::get<HPolytope>(P), p, kind, cap);
                out["value"] = to_fraction_string(v);
                if (!gamma_str.empty()) {
                    bool yes = v >= parse_rational(gamma_str);  // is radius^p >= gamma
                    out["decision"] = yes;
                    exit_code = yes ? 0 : 1;
                }
            } else {
                if (!std::holds_alternative<VPolytope>(P))
                    throw Error("inradius/width expect a V-polytope file");
                RadiusKind kind = which == "inradius" ? RadiusKind::inradius : RadiusKind::width;
                RadiusVResult r = radius_v(std::get<VPolytope>(P), p, kind, cap);
                out["value"] = to_fraction_string(r.polar_max);
                if (!gamma_str.empty()) {
                    bool yes = r.decide(parse_rational(gamma_str));  // is radius^p <= gamma
                    out["decision"] = yes;
                    exit_code = yes ? 0 : 1;
                }
            }
        } else if (*c_parmax) {
            std::string text = slurp(vectors_file);
            out["inputs_digest"] = fnv1a_hex(text);
            VPolytope V = parse_vpolytope(text);
            ParmaxMode m = mode == "sym" ? ParmaxMode::sym : ParmaxMode::zero_one;
            NormmaxResult r = parmax(V.points, m, p, cap);
            out["value"] = to_fraction_string(r.value);
            out["witness"] = witness_json(r.witness);
        } else if (*c_verify) {
            if (what == "gadget-bounds") {
                BoundsReport rep = verify_gadget_bounds(static_cast<std::size_t>(n_arg), p);
                out["U"] = to_fraction_string(rep.U);
                out["eps_bar"] = to_fraction_string(rep.eps_bar);
                json checks = json::array();
                for (const auto& c : rep.checks)
                    checks.push_back({{"name", c.name}, {"passed", c.passed},
                                      {"details", c.details}});
                out["checks"] = checks;
                out["decision"] = rep.all_passed();
                exit_code = rep.all_passed() ? 0 : 1;
            } else {
                ApproxBall B = build_ball_approx(p, beta, ball_dim);
                bool inner = verify_inner_containment(B);
                OuterCheck outer = verify_outer_containment(B);
                out["facet_count"] = B.facet_count;
                out["grid_radius"] = B.grid_radius;
                out["inner_containment"] = inner;
                out["outer_containment"] = outer.passed;
                out["outer_mode"] = outer.exact ? "exact" : "sampled";
                out["decision"] = inner && outer.passed;
                exit_code = inner && outer.passed ? 0 : 1;
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    out["time_ms"] = timer.ms();
    std::cout << out.dump(2) << std::endl;
    return exit_code;
}
