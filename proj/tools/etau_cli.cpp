// etau: surfaces, property suites, Dirichlet solves and slab audits for E(-1,tau).
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "etau/io.hpp"
#include "etau/surfaces.hpp"
#include "etau/verify.hpp"

using namespace etau;

namespace {

enum Exit { kOk = 0, kInvalid = 1, kFailure = 2 };

struct Options {
    double tau = 0.0;
    double d = std::nan("");
    double s = 1.0;
    double lambda = 1.0;
    double eps = 0.1;
    double h0 = 1.0;
    double r = 1.0;
    double C = 0.2;
    double h = 0.45;
    double alpha = 0.4;
    double rho_max = std::nan("");
    double theta_min = 0.05;
    double phi_min = -1.0;
    double phi_max = 1.0;
    int rows = 64;
    int cols = 64;
    int n = 0;
    int grid = 65;
    std::uint64_t seed = 0;
    std::string sheet = "both";
    std::string surface = "catenoid";
    std::string boundary = "zero";
    std::string graph = "linear";
    std::string out;
    std::string csv;
    std::string profile;
    std::string input;
    std::string config;
    bool cylinder = false;
};

// Keys of a --config file fill the options not given on the command line.
void apply_config(CLI::App& app, Options& o) {
    if (o.config.empty()) return;
    std::ifstream f(o.config);
    if (!f) throw ParameterError("cannot read config file " + o.config);
    const json j = json::parse(f);
    const std::map<std::string, double*> reals{
        {"tau", &o.tau},         {"d", &o.d},         {"s", &o.s},           {"lambda", &o.lambda},
        {"eps", &o.eps},         {"h0", &o.h0},       {"r", &o.r},           {"C", &o.C},
        {"h", &o.h},             {"alpha", &o.alpha}, {"rho-max", &o.rho_max}, {"theta-min", &o.theta_min},
        {"phi-min", &o.phi_min}, {"phi-max", &o.phi_max}};
    const std::map<std::string, int*> ints{{"rows", &o.rows}, {"cols", &o.cols}, {"n", &o.n}, {"grid", &o.grid}};
    const std::map<std::string, std::string*> strings{{"sheet", &o.sheet}, {"surface", &o.surface},
                                                      {"boundary", &o.boundary}, {"graph", &o.graph},
                                                      {"out", &o.out}, {"csv", &o.csv}};
    const auto given = [&](const std::string& key) {
        std::function<bool(const CLI::App*)> walk = [&](const CLI::App* a) {
            const CLI::Option* opt = a->get_option_no_throw("--" + key);
            if (opt != nullptr && opt->count() > 0) return true;
            for (const CLI::App* sub : a->get_subcommands())
                if (walk(sub)) return true;
            return false;
        };
        return walk(&app);
    };
    for (const auto& [key, value] : j.items()) {
        if (given(key)) continue;
        if (auto it = reals.find(key); it != reals.end()) *it->second = value.get<double>();
        else if (auto it2 = ints.find(key); it2 != ints.end()) *it2->second = value.get<int>();
        else if (auto it3 = strings.find(key); it3 != strings.end()) *it3->second = value.get<std::string>();
        else if (key == "seed") o.seed = value.get<std::uint64_t>();
        else if (key == "cylinder") o.cylinder = value.get<bool>();
        else throw ParameterError("unknown config key '" + key + "'");
    }
}

void emit(const json& report, const std::string& path) {
    if (path.empty()) {
        std::cout << report.dump(2) << '\n';
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << report.dump(2) << '\n';
}

json envelope(const std::string& command) { return {{"schema_version", kSchemaVersion}, {"command", command}}; }

std::string sidecar(const std::string& obj) {
    std::filesystem::path p(obj);
    p.replace_extension(".nu.csv");
    return p.string();
}

Sheet sheet_from(const std::string& s) {
    if (s == "both") return Sheet::Both;
    if (s == "plus") return Sheet::Plus;
    if (s == "minus") return Sheet::Minus;
    throw ParameterError("sheet must be both, plus or minus");
}

double require_d(const Options& o, double fallback) { return std::isnan(o.d) ? fallback : o.d; }

// ---- surface ----

int write_mesh(const SurfaceMesh& mesh, const Options& o, const std::string& fallback, json& rep) {
    const std::string obj = o.out.empty() ? fallback : o.out;
    std::ofstream f(obj);
    if (!f) throw std::runtime_error("cannot write " + obj);
    write_obj(f, mesh);
    std::ofstream g(sidecar(obj));
    write_nu_csv(g, mesh);
    double nu_min = 1.0, nu_max = 0.0;
    for (double v : mesh.nu) {
        nu_min = std::min(nu_min, std::abs(v));
        nu_max = std::max(nu_max, std::abs(v));
    }
    rep["model"] = to_string(mesh.model);
    rep["rows"] = mesh.rows;
    rep["cols"] = mesh.cols;
    rep["vertices"] = mesh.vertices.size();
    rep["triangles"] = mesh.triangles.size();
    rep["abs_nu_range"] = {nu_min, nu_max};
    rep["obj"] = obj;
    rep["nu_csv"] = sidecar(obj);
    return kOk;
}

int cmd_surface(const std::string& kind, const Options& o, json& rep) {
    const SpaceParams sp{o.tau};
    rep["surface"] = kind;
    rep["tau"] = o.tau;
    if (o.rows < 3 || o.cols < 3) throw ParameterError("rows and cols must be at least 3");
    if (kind == "catenoid") {
        const double d = require_d(o, 1.0);
        if (!(d > 0.0)) throw ParameterError("catenoid needs d > 0");
        const CatenoidSpec cs{d, sp};
        const double rho_max = std::isnan(o.rho_max) ? catenoid_neck(d) + 2.0 : o.rho_max;
        rep["d"] = d;
        rep["rho_max"] = rho_max;
        rep["height"] = catenoid_height(cs);
        if (!o.profile.empty()) {
            std::ofstream f(o.profile);
            f.precision(17);
            f << "rho,u\n";
            const double r0 = catenoid_neck(d);
            for (int k = 0; k <= 256; ++k) {
                const double rho = r0 + (rho_max - r0) * k / 256.0;
                f << rho << ',' << catenoid_profile(cs, rho) << '\n';
            }
            rep["profile_csv"] = o.profile;
        }
        return write_mesh(mesh_catenoid(cs, rho_max, o.rows, o.cols), o, "catenoid.obj", rep);
    }
    const double d = require_d(o, 2.0);
    if (!(d > 1.0)) throw ParameterError("invariant surfaces need d > 1 (got d = " + std::to_string(d) + ")");
    if (!(o.s > 0.0)) throw ParameterError("s must be positive");
    if (!(o.theta_min > 0.0 && o.theta_min < invariant_angle(d)))
        throw ParameterError("theta-min must lie in (0, arcsin(1/d))");
    const InvariantSurfaceSpec spec{d, o.s, sp, sheet_from(o.sheet), false};
    rep["d"] = d;
    rep["s"] = o.s;
    rep["sheet"] = o.sheet;
    rep["height"] = invariant_height(d, sp);
    rep["gluing_angle"] = invariant_angle(d);
    if (!o.profile.empty()) {
        std::ofstream f(o.profile);
        f.precision(17);
        f << "theta,u_plus,u_minus\n";
        const double a = invariant_angle(d);
        InvariantSurfaceSpec minus = spec;
        minus.side = Sheet::Minus;
        InvariantSurfaceSpec plus = spec;
        plus.side = Sheet::Plus;
        for (int k = 0; k <= 256; ++k) {
            const double th = o.theta_min + (a - o.theta_min) * k / 256.0;
            f << th << ',' << invariant_profile(plus, th) << ',' << invariant_profile(minus, th) << '\n';
        }
        rep["profile_csv"] = o.profile;
    }
    SurfaceMesh mesh;
    if (kind == "invariant") {
        mesh = mesh_invariant_surface(spec, o.phi_min, o.phi_max, o.theta_min, o.rows, o.cols);
        // projections must lie in the closed domain theta_min <= angle about (s, 0) <= arcsin(1/d)
        double worst = 0.0;
        for (const auto& v : mesh.vertices) {
            const double th = std::atan2(v.base.y, v.base.x - o.s);
            worst = std::max({worst, o.theta_min - th, th - invariant_angle(d)});
        }
        rep["domain_violation"] = std::max(0.0, worst);
    } else {
        if (!(o.lambda > 0.0)) throw ParameterError("lambda must be positive");
        rep["lambda"] = o.lambda;
        mesh = leaf_mesh({o.lambda, spec}, o.phi_min, o.phi_max, o.theta_min, o.rows, o.cols);
    }
    if (o.cylinder) mesh = convert_surface_to_cylinder(mesh, sp);
    return write_mesh(mesh, o, kind + ".obj", rep);
}

// ---- verify ----

int cmd_verify(const std::string& suite, const Options& o, json& rep) {
    const SpaceParams sp{o.tau};
    rep["suite"] = suite;
    rep["tau"] = o.tau;
    bool pass = false;
    if (suite == "limits") {
        const LimitsReport r = verify_limits(sp);
        rep["invariant_height_1e4"] = r.h_large;
        rep["invariant_limit"] = r.h_limit;
        rep["catenoid_height_1e3"] = r.H_large;
        rep["catenoid_limit"] = r.H_limit;
        pass = r.pass;
    } else if (suite == "isometries") {
        const int n = o.n > 0 ? o.n : 1000;
        json rows = json::array();
        pass = true;
        for (const auto& row : isometry_pullbacks(sp, n, o.seed)) {
            rows.push_back({{"family", row.family},
                            {"samples", row.samples},
                            {"max_residual", row.max_residual},
                            {"max_fiber_defect", row.max_fiber_defect}});
            pass = pass && row.max_residual < 1e-9 && row.max_fiber_defect < 1e-12;
        }
        rep["seed"] = o.seed;
        rep["families"] = rows;
    } else if (suite == "minimality") {
        const double d = require_d(o, 2.0);
        const MinimalityStudy st = minimality_study(o.surface, d, sp);
        rep["surface"] = o.surface;
        rep["d"] = d;
        rep["sizes"] = st.sizes;
        rep["max_abs_H"] = st.max_h;
        rep["orders"] = st.orders;
        pass = st.max_h.front() < 1e-3;
        for (double p : st.orders) pass = pass && p >= 1.7 && p <= 2.3;
    } else if (suite == "lifts") {
        const LiftReport r = verify_lifts(sp);
        const double spread = generic_lift_spread(sp);
        rep["closed_vs_quadrature"] = r.closed_vs_quadrature;
        rep["max_variation"] = r.max_variation;
        rep["variation_bound"] = r.variation_bound;
        rep["vertical_line_spread"] = r.vertical_line_spread;
        rep["radial_line_spread"] = r.radial_line_spread;
        rep["horizontality_defect"] = r.horizontality;
        rep["generic_curve_spread"] = spread;
        pass = r.closed_vs_quadrature < 1e-10 && r.max_variation <= r.variation_bound + 1e-12 &&
               r.vertical_line_spread < 1e-12 && r.radial_line_spread < 1e-12 && r.horizontality < 1e-8 &&
               (o.tau != 0.0 || spread == 0.0);
    } else if (suite == "transversality") {
        const TransversalityReport r = verify_transversality(o.eps, o.h0, sp);
        rep["epsilon"] = r.epsilon;
        rep["h0"] = r.h0;
        rep["delta"] = r.delta;
        rep["lhs"] = r.lhs;
        rep["d"] = r.d;
        rep["max_nu"] = r.max_nu;
        pass = r.inequality && r.nu_below;
    } else if (suite == "foliation") {
        const FoliationParams fp{require_d(o, 1.5), o.s, o.h0};
        const FoliationReport r = verify_foliation(fp, sp, o.n > 0 ? o.n : 100, o.seed);
        rep["d"] = fp.d;
        rep["s"] = fp.s;
        rep["h0"] = fp.h0;
        rep["seed"] = o.seed;
        rep["points"] = r.points;
        rep["succeeded"] = r.succeeded;
        rep["max_residual"] = r.max_residual;
        rep["max_equivariance"] = r.max_equivariance;
        if (!r.errors.empty()) rep["errors"] = r.errors;
        pass = r.succeeded == r.points && r.max_residual < 1e-6 && r.max_equivariance < 1e-6;
    }
    rep["pass"] = pass;
    return pass ? kOk : kFailure;
}

// ---- solve ----

int cmd_solve(const Options& o, json& rep) {
    const SpaceParams sp{o.tau};
    if (o.grid < 5) throw ParameterError("grid must be at least 5");
    GraphFunction boundary;
    std::optional<GraphFunction> exact;
    rep["boundary"] = o.boundary;
    rep["tau"] = o.tau;
    if (!o.input.empty()) {
        std::ifstream f(o.input);
        if (!f) throw ParameterError("cannot read " + o.input);
        boundary = read_graph_csv(f);
        rep["boundary"] = o.input;
    } else if (o.boundary == "catenoid" || o.boundary == "invariant") {
        const double d = require_d(o, 2.0);
        rep["d"] = d;
        exact = oracle_patch(o.boundary, d, sp, o.grid).exact;
        boundary = *exact;
    } else if (o.boundary == "zero" || o.boundary == "extreme") {
        const auto dom = GraphDomain::make(Model::HalfSpace, -0.5, 0.5, 0.5, 1.5, o.grid, o.grid,
                                           [](const BasePoint& b) { return std::hypot(b.x, b.y - 1.0) <= 0.5; });
        const bool zero = o.boundary == "zero";
        boundary = GraphFunction::sample(dom, [&](const BasePoint& b) {
            return zero ? 0.0 : 1e3 * std::sin(40.0 * b.x) * std::cos(37.0 * b.y);
        });
    } else {
        throw ParameterError("boundary must be zero, catenoid, invariant or extreme");
    }
    SolverOptions opt;
    if (o.boundary == "extreme") {
        opt.max_iterations = 15;
        opt.descent_iterations = 20;
    }
    const SolveReport r = solve_dirichlet(boundary, sp, opt);
    const json conv = to_json(r);
    for (const auto& [k, v] : conv.items()) rep[k] = v;
    if (exact) {
        double err = 0.0;
        for (std::size_t k = 0; k < exact->values.size(); ++k)
            if (!std::isnan(exact->values[k])) err = std::max(err, std::abs(exact->values[k] - r.solution.values[k]));
        rep["sup_error"] = err;
    }
    if (o.boundary == "zero") {
        double m = 0.0;
        for (double v : r.solution.values)
            if (!std::isnan(v)) m = std::max(m, std::abs(v));
        rep["sup_norm"] = m;
    }
    if (!o.csv.empty()) {
        std::ofstream f(o.csv);
        if (!f) throw std::runtime_error("cannot write " + o.csv);
        write_graph_csv(f, r.solution);
        rep["csv"] = o.csv;
    }
    return r.converged ? kOk : kFailure;
}

// ---- slab ----

int cmd_slab(const std::string& which, const Options& o, json& rep) {
    const SpaceParams sp{o.tau};
    const int n = o.n > 0 ? o.n : 20;
    rep["construction"] = which;
    rep["tau"] = o.tau;
    rep["seed"] = o.seed;
    SlabSpec slab;
    if (which == "example1") {
        Example1Info info;
        slab = build_example1(sp, o.eps, &info);
        rep["epsilon"] = o.eps;
        rep["example1"] = to_json(info);
    } else {
        Example2Config cfg;
        cfg.r = o.r;
        cfg.C = o.C;
        cfg.h = o.h;
        cfg.alpha = o.alpha;
        if (o.graph == "si") cfg.graph = GraphChoice::SineIntegral;
        else if (o.graph != "linear") throw ParameterError("graph must be linear or si");
        rep["graph"] = o.graph;
        rep["r"] = o.r;
        rep["C"] = o.C;
        rep["h"] = o.h;
        const Example2Feasibility f = example2_feasibility(cfg);
        rep["feasibility"] = to_json(f);
        if (!f.feasible) {
            rep["pass"] = false;
            rep["infeasible"] = f.violated;
            return kInvalid;
        }
        slab = build_example2(sp, cfg);
    }
    const SlabReport r = audit_slab(slab, n, o.seed);
    rep["report"] = to_json(r);
    rep["pass"] = r.pass;
    return r.pass ? kOk : kFailure;
}

void add_common(CLI::App* c, Options& o) {
    c->add_option("--tau", o.tau, "bundle curvature");
    c->add_option("--config", o.config, "JSON file of option values (flags override)");
    c->add_option("--seed", o.seed, "seed for random sampling");
    c->add_option("--out", o.out, "output path");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Geometry of E(-1,tau): canonical minimal surfaces, graph solver and slab audits"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print this help message and exit");
    Options o;
    std::string kind, action;
    std::function<int(json&)> run;
    json rep;

    auto* surface = app.add_subcommand("surface", "mesh a catenoid, an invariant surface or a foliation leaf");
    surface->require_subcommand(1);
    for (const char* k : {"catenoid", "invariant", "leaf"}) {
        auto* c = surface->add_subcommand(k);
        add_common(c, o);
        c->add_option("--d", o.d, "surface parameter");
        c->add_option("--s", o.s, "ideal point of the translation axis");
        c->add_option("--lambda", o.lambda, "leaf scale");
        c->add_option("--rho-max", o.rho_max, "catenoid cut radius");
        c->add_option("--theta-min", o.theta_min, "smallest angle about (s, 0)");
        c->add_option("--phi-min", o.phi_min, "log-radius range start");
        c->add_option("--phi-max", o.phi_max, "log-radius range end");
        c->add_option("--rows", o.rows);
        c->add_option("--cols", o.cols);
        c->add_option("--sheet", o.sheet, "both, plus or minus");
        c->add_option("--profile", o.profile, "profile CSV path");
        c->add_flag("--cylinder", o.cylinder, "convert to the cylinder model");
        c->callback([&, k] {
            rep = envelope(std::string("surface ") + k);
            run = [&o, k](json& r) { return cmd_surface(k, o, r); };
        });
    }

    auto* verify = app.add_subcommand("verify", "run a property suite");
    verify->require_subcommand(1);
    for (const char* k : {"limits", "isometries", "minimality", "lifts", "transversality", "foliation"}) {
        auto* c = verify->add_subcommand(k);
        add_common(c, o);
        c->add_option("--d", o.d);
        c->add_option("--s", o.s);
        c->add_option("--eps", o.eps);
        c->add_option("--h0", o.h0);
        c->add_option("--n", o.n, "number of sample points");
        c->add_option("--surface", o.surface, "catenoid or invariant");
        c->callback([&, k] {
            rep = envelope(std::string("verify ") + k);
            run = [&o, k](json& r) { return cmd_verify(k, o, r); };
        });
    }

    auto* solve = app.add_subcommand("solve", "Dirichlet problem for the minimal graph equation");
    add_common(solve, o);
    solve->add_option("--boundary", o.boundary, "zero, catenoid, invariant or extreme");
    solve->add_option("--input", o.input, "boundary graph CSV (overrides --boundary)");
    solve->add_option("--d", o.d);
    solve->add_option("--grid", o.grid, "nodes per side");
    solve->add_option("--csv", o.csv, "solution CSV path");
    solve->callback([&] {
        rep = envelope("solve");
        run = [&o](json& r) { return cmd_solve(o, r); };
    });

    auto* slab = app.add_subcommand("slab", "audit a generalized slab construction");
    slab->require_subcommand(1);
    for (const char* k : {"example1", "example2"}) {
        auto* c = slab->add_subcommand(k);
        add_common(c, o);
        c->add_option("--eps", o.eps);
        c->add_option("--r", o.r);
        c->add_option("--C", o.C);
        c->add_option("--h", o.h);
        c->add_option("--alpha", o.alpha);
        c->add_option("--graph", o.graph, "linear or si");
        c->add_option("--n", o.n, "number of sample points");
        c->callback([&, k] {
            rep = envelope(std::string("slab ") + k);
            run = [&o, k](json& r) { return cmd_slab(k, o, r); };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        json err = envelope("parse");
        err["status"] = "invalid_input";
        err["error"] = e.what();
        std::cout << err.dump(2) << '\n';
        return kInvalid;
    }

    int code = kOk;
    try {
        apply_config(app, o);
        code = run(rep);
        rep["status"] = code == kOk ? "ok" : code == kInvalid ? "invalid_input" : "failed";
    } catch (const ParameterError& e) {
        rep["status"] = "invalid_input";
        rep["error"] = e.what();
        code = kInvalid;
    } catch (const InvalidPoint& e) {
        rep["status"] = "invalid_input";
        rep["error"] = e.what();
        code = kInvalid;
    } catch (const InfeasibleError& e) {
        rep["status"] = "invalid_input";
        rep["error"] = e.what();
        code = kInvalid;
    } catch (const std::exception& e) {
        rep["status"] = "failed";
        rep["error"] = e.what();
        code = kFailure;
    }
    const bool mesh_cmd = rep.value("command", std::string()).rfind("surface", 0) == 0;
    try {
        emit(rep, mesh_cmd ? std::string() : o.out);
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return kFailure;
    }
    return code;
}
