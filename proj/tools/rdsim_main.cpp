#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <rdsim/rdsim.hpp>

namespace fs = std::filesystem;
using namespace rdsim;

namespace {

// Central tolerance table; every verify check reads from here and every
// entry is overridable by a --tol-* flag.
struct ToleranceTable {
    double ode = 1e-8;
    double first_integral = 1e-8;
    double pde = 1e-5;
    double conservation = 1e-6;   // |fitted exponent - (alpha + mu)|
    double identity = 1e-8;
    double identity_windowed = 1e-6; // window-relative (non-decaying profiles)
    double scale = 1e-10;
};

std::map<std::string, double> parse_params(const std::vector<std::string>& kvs) {
    std::map<std::string, double> out;
    for (const auto& kv : kvs) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ContractError("expected key=value, got '" + kv + "'");
        const std::string key = kv.substr(0, eq);
        const std::string val = kv.substr(eq + 1);
        try {
            size_t used = 0;
            const double v = std::stod(val, &used);
            if (used != val.size()) throw std::invalid_argument(val);
            out[key] = v;
        } catch (const std::exception&) {
            throw ContractError("parameter '" + key + "' has non-numeric value '" + val + "'");
        }
    }
    return out;
}

std::string resolve_out_dir(const std::string& flag) {
    std::string dir = flag;
    if (dir.empty()) {
        const char* env = std::getenv("RD_OUT_DIR");
        dir = (env && *env) ? env : ".";
    }
    fs::create_directories(dir);
    return dir;
}

void print_warnings(const AnalyticRDSystem& sys) {
    for (const auto& w : sys.warnings) std::cerr << "warning: " << w << "\n";
}

double now_seconds(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---------------------------------------------------------------------------
// list
// ---------------------------------------------------------------------------

int cmd_list(bool json_out, const std::string& family) {
    std::vector<SystemDescriptor> rows;
    for (const auto& d : list_systems()) {
        if (family == "conserving" && !d.conserving) continue;
        if (family == "growth" && d.conserving) continue;
        rows.push_back(d);
    }
    if (json_out) {
        json arr = json::array();
        for (const auto& d : rows) arr.push_back(to_json(d));
        std::cout << arr.dump(2) << "\n";
        return 0;
    }
    size_t fam_w = std::string("FAMILY").size();
    for (const auto& d : rows) fam_w = std::max(fam_w, d.family.size());
    std::printf("%-10s %-*s %-9s %-9s %-5s %-7s %s\n", "NAME", static_cast<int>(fam_w), "FAMILY",
                "ALPHA", "MU", "CONSV", "SOLVER", "CONSTRAINTS");
    for (const auto& d : rows) {
        const std::string alpha = d.alpha_note == "free" ? detail::num(d.alpha) + "*"
                                                         : detail::num(d.alpha);
        std::printf("%-10s %-*s %-9s %-9s %-5s %-7s %s\n", d.name.c_str(),
                    static_cast<int>(fam_w), d.family.c_str(), alpha.c_str(),
                    detail::num(d.mu).c_str(), d.conserving ? "yes" : "no",
                    d.solver_eligible ? "yes" : "no", d.constraint_note.c_str());
    }
    std::printf("(* default value; exponent is a free parameter)\n");
    return 0;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyOptions {
    std::string system;
    std::vector<std::string> params;
    std::string checks = "all";
    std::string deriv = "auto";
    bool json_out = false;
    ToleranceTable tol;
};

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

int cmd_verify(const VerifyOptions& opt) {
    const AnalyticRDSystem sys = make_system(opt.system, parse_params(opt.params));
    print_warnings(sys);

    const std::vector<std::string> requested = split_csv(opt.checks);
    static const std::vector<std::string> known = {"all",          "ode",      "first-integral",
                                                   "pde",          "identity", "conservation",
                                                   "scale"};
    for (const auto& c : requested)
        if (std::find(known.begin(), known.end(), c) == known.end())
            throw ContractError("unknown check: " + c);
    const bool all = std::find(requested.begin(), requested.end(), "all") != requested.end();
    auto wanted = [&](const char* name) {
        return all || std::find(requested.begin(), requested.end(), name) != requested.end();
    };

    ResidualOptions ropts;
    if (opt.deriv == "analytic") ropts.mode = DerivativeMode::Analytic;
    else if (opt.deriv == "fd") ropts.mode = DerivativeMode::FiniteDifference;
    else if (opt.deriv != "auto") throw ContractError("unknown derivative mode: " + opt.deriv);

    json checks_json = json::object();
    bool all_pass = true;
    std::string first_fail;
    auto record = [&](const std::string& name, bool pass, json rep, double metric, double tol) {
        rep["tolerance"] = tol;
        rep["verdict"] = pass ? "pass" : "fail";
        checks_json[name] = rep;
        if (!opt.json_out)
            std::printf("check %-15s %s  (value = %.3e, tolerance = %.0e)\n",
                        (name + ":").c_str(), pass ? "pass" : "FAIL", metric, tol);
        if (!pass && first_fail.empty()) first_fail = name;
        all_pass = all_pass && pass;
    };
    auto record_skip = [&](const std::string& name, const std::string& reason) {
        checks_json[name] = json{{"verdict", "skipped"}, {"reason", reason}};
        if (!opt.json_out)
            std::printf("check %-15s skipped  (%s)\n", (name + ":").c_str(), reason.c_str());
    };

    // A profile with a non-decaying tail has no finite total number; its
    // conservation analysis switches to the windowed continuity identity.
    bool divergent = false;
    try {
        (void)find_truncation(sys, sys.windows.t_lo);
    } catch (const DivergentIntegralError&) {
        divergent = true;
    }

    if (wanted("ode")) {
        const auto rep = ode_residual(sys, default_z_samples(sys), ropts);
        record("ode", rep.max_abs < opt.tol.ode, to_json(rep), rep.max_abs, opt.tol.ode);
    }
    if (wanted("first-integral")) {
        if (!sys.conserving()) {
            if (!all) throw ContractError("first integral requires mu = -alpha");
            record_skip("first-integral", "growth system: mu != -alpha");
        } else {
            const auto rep = first_integral_residual(sys, default_z_samples(sys), ropts);
            record("first-integral", rep.max_abs < opt.tol.first_integral, to_json(rep),
                   rep.max_abs, opt.tol.first_integral);
        }
    }
    if (wanted("pde")) {
        const auto rep = pde_residual(sys, default_xt_samples(sys), ropts);
        record("pde", rep.max_abs < opt.tol.pde, to_json(rep), rep.max_abs, opt.tol.pde);
    }
    if (wanted("conservation")) {
        if (divergent) {
            const auto rep = check_continuity_identity(sys, -30.0, 30.0);
            json j = to_json(rep);
            j["divergent_total_number"] = true;
            j["window"] = json::array({-30.0, 30.0});
            if (!opt.json_out)
                std::printf("note: divergent total number; windowed identity on [-30, 30]\n");
            record("conservation", rep.defect < opt.tol.identity_windowed, j, rep.defect,
                   opt.tol.identity_windowed);
        } else {
            const auto rep = check_N_scaling(sys);
            const double err = std::fabs(rep.fitted_exponent - rep.expected_exponent);
            record("conservation", err < opt.tol.conservation, to_json(rep), err,
                   opt.tol.conservation);
        }
    }
    if (wanted("identity")) {
        if (divergent) {
            const auto rep = check_continuity_identity(sys, -30.0, 30.0);
            json j = to_json(rep);
            j["window"] = json::array({-30.0, 30.0});
            record("identity", rep.defect < opt.tol.identity_windowed, j, rep.defect,
                   opt.tol.identity_windowed);
        } else {
            const auto rep = check_continuity_identity(sys);
            record("identity", rep.defect < opt.tol.identity, to_json(rep), rep.defect,
                   opt.tol.identity);
        }
    }
    if (wanted("scale")) {
        const auto samples = default_scale_samples(sys, 100);
        double worst = 0.0;
        for (double eps : {0.5, 2.0, 10.0})
            worst = std::max(worst, check_scale_invariance(sys, eps, samples));
        json j;
        j["max_defect"] = worst;
        j["epsilons"] = json::array({0.5, 2.0, 10.0});
        j["n_samples"] = samples.size();
        record("scale", worst < opt.tol.scale, j, worst, opt.tol.scale);
    }

    if (opt.json_out) {
        json out;
        out["system"] = sys.name;
        out["parameters"] = sys.params;
        out["checks"] = checks_json;
        out["verdict"] = all_pass ? "pass" : "fail";
        std::cout << out.dump(2) << "\n";
    } else if (all_pass) {
        std::printf("%s: all checks passed\n", sys.name.c_str());
    } else {
        std::printf("%s: check failed: %s\n", sys.name.c_str(), first_fail.c_str());
    }
    return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

struct SimDefaults {
    double t0, t1, xmin, xmax, dt, theta;
    int n;
};

SimDefaults sim_defaults(const std::string& name) {
    if (name == "NFP-EXP") return {1.0, 1.5, 0.0, 25.0, 1e-3, 0.5, 800};
    if (name == "NFP-QUAD") return {1.0, 2.0, 0.0, 12.0, 1e-3, 0.5, 800};
    if (name == "NL-DIFF") return {1.0, 2.0, -4.0, 4.0, 1e-3, 0.5, 800};
    if (name == "GR-HALF") return {1.0, 2.0, 0.0, 30.0, 1e-3, 0.5, 800};
    if (name == "FISHER-N") return {0.05, 0.2, -10.0, 10.0, 1e-4, 0.5, 800};
    return {1.0, 2.0, -12.0, 12.0, 1e-3, 0.5, 800};
}

struct SimulateOptions {
    std::string system;
    std::vector<std::string> params;
    double t0 = std::nan("");
    double t1 = std::nan("");
    double xmin = std::nan("");
    double xmax = std::nan("");
    double dt = std::nan("");
    double theta = std::nan("");
    int n = 0;
    double tol = 1e-2;
    std::string boundary = "analytic-dirichlet";
    std::string out_dir;
    bool json_out = false;
};

void write_field_with_sidecar(const std::string& stem, const NumericField& field,
                              const std::string& system, std::vector<std::string>& outputs) {
    write_field_csv(stem + ".csv", field);
    json side;
    side["system"] = system;
    side["t"] = field.t;
    side["x_min"] = field.grid.x_min;
    side["x_max"] = field.grid.x_max;
    side["n_cells"] = field.grid.n_cells;
    write_text_file(stem + ".json", side.dump(2) + "\n");
    outputs.push_back(stem + ".csv");
    outputs.push_back(stem + ".json");
}

int cmd_simulate(SimulateOptions opt) {
    const auto start = std::chrono::steady_clock::now();
    const AnalyticRDSystem sys = make_system(opt.system, parse_params(opt.params));
    if (!sys.solver_eligible) {
        std::cerr << "error: anti-parabolic system not integrable\n";
        return 2;
    }
    print_warnings(sys);

    const SimDefaults d = sim_defaults(sys.name);
    if (std::isnan(opt.t0)) opt.t0 = d.t0;
    if (std::isnan(opt.t1)) opt.t1 = d.t1;
    if (std::isnan(opt.xmin)) opt.xmin = d.xmin;
    if (std::isnan(opt.xmax)) opt.xmax = d.xmax;
    if (std::isnan(opt.dt)) opt.dt = d.dt;
    if (std::isnan(opt.theta)) opt.theta = d.theta;
    if (opt.n == 0) opt.n = d.n;

    SolverConfig cfg;
    cfg.theta = opt.theta;
    cfg.dt = opt.dt;
    cfg.t_start = opt.t0;
    cfg.t_end = opt.t1;
    if (opt.boundary == "analytic-dirichlet") cfg.boundary = BoundaryRule::AnalyticDirichlet;
    else if (opt.boundary == "homogeneous-dirichlet")
        cfg.boundary = BoundaryRule::HomogeneousDirichlet;
    else throw ContractError("unknown boundary rule: " + opt.boundary);

    const Grid1D grid(opt.xmin, opt.xmax, opt.n);
    NumericField initial{grid, cfg.t_start, std::vector<double>(grid.n_nodes())};
    for (int i = 0; i < grid.n_nodes(); ++i)
        initial.values[i] = static_cast<double>(sys.W(grid.x(i), cfg.t_start));

    const NumericField final_field = solve(sys, grid, cfg);
    const ComparisonReport cmp = compare_to_analytic(final_field, sys);
    const bool pass = cmp.l2_relative < opt.tol;

    const std::string dir = resolve_out_dir(opt.out_dir);
    const std::string prefix = dir + "/" + sys.name;
    std::vector<std::string> outputs;
    write_field_with_sidecar(prefix + "_initial", initial, sys.name, outputs);
    write_field_with_sidecar(prefix + "_final", final_field, sys.name, outputs);
    write_text_file(prefix + "_comparison.json", to_json(cmp).dump(2) + "\n");
    outputs.push_back(prefix + "_comparison.json");

    RunManifest manifest;
    manifest.command = "simulate";
    manifest.system = sys.name;
    manifest.parameters = sys.params;
    manifest.config = json{{"t0", opt.t0},     {"t1", opt.t1},   {"xmin", opt.xmin},
                           {"xmax", opt.xmax}, {"n", opt.n},     {"dt", opt.dt},
                           {"theta", opt.theta}, {"boundary", opt.boundary}, {"tol", opt.tol}};
    manifest.outputs = outputs;
    manifest.duration_seconds = now_seconds(start);
    manifest.verdicts["l2_relative"] = pass ? "pass" : "fail";
    write_text_file(prefix + "_manifest.json", to_json(manifest).dump(2) + "\n");

    if (opt.json_out) {
        json out = to_json(cmp);
        out["verdict"] = pass ? "pass" : "fail";
        out["outputs"] = outputs;
        std::cout << out.dump(2) << "\n";
    } else {
        std::printf("%s: t %g -> %g on [%g, %g], %d cells, dt = %g, theta = %g\n",
                    sys.name.c_str(), opt.t0, opt.t1, opt.xmin, opt.xmax, opt.n, opt.dt,
                    opt.theta);
        std::printf("l2_relative = %.3e (tolerance %.0e): %s\n", cmp.l2_relative, opt.tol,
                    pass ? "pass" : "FAIL");
        std::printf("max_abs_error = %.3e, mass numeric/analytic = %.12g / %.12g\n",
                    cmp.max_abs_error, cmp.mass_numeric, cmp.mass_analytic);
    }
    return pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// figure
// ---------------------------------------------------------------------------

struct FigureSpec {
    std::string system;
    double xlo, xhi;
    std::vector<double> times;
};

FigureSpec figure_spec(int which) {
    switch (which) {
    case 1: return {"NFP-GAUSS", -6.0, 6.0, {1.0, 2.0, 3.0}};
    case 2: return {"NFP-EXP", 0.0, 10.0, {1.0, 1.25, 1.5}};
    case 3: return {"GR-GAUSS", -6.0, 6.0, {1.0, 2.0, 3.0}};
    case 4: return {"FISHER-N", -8.0, 8.0, {0.05, 0.1, 0.2}};
    }
    throw ContractError("figure index must be in 1..4");
}

int cmd_figure(int which, const std::string& out_flag) {
    const auto start = std::chrono::steady_clock::now();
    const FigureSpec spec = figure_spec(which);
    const AnalyticRDSystem sys = make_system(spec.system); // figure = documented defaults
    print_warnings(sys);

    // 400 uniform intervals, endpoints included, so x = 0 is an exact node.
    std::vector<double> xs(401);
    for (int i = 0; i <= 400; ++i) xs[i] = spec.xlo + (spec.xhi - spec.xlo) * i / 400.0;

    const std::string dir = resolve_out_dir(out_flag);
    const std::string stem = dir + "/fig" + std::to_string(which);
    std::vector<std::string> outputs;
    auto emit = [&](const std::string& tag, auto&& field) {
        const std::string path = stem + "_" + tag + ".csv";
        write_profile_csv(path, xs, spec.times,
                          [&](double x, double t) { return static_cast<double>(field(x, t)); });
        outputs.push_back(path);
    };
    emit("D", [&](double x, double t) { return sys.D_xt(x, t); });
    emit("f", [&](double x, double t) { return sys.f_xt(x, t); });
    emit("W", [&](double x, double t) { return sys.W(x, t); });

    RunManifest manifest;
    manifest.command = "figure";
    manifest.system = sys.name;
    manifest.parameters = sys.params;
    manifest.config = json{{"which", which},
                           {"x_range", json::array({spec.xlo, spec.xhi})},
                           {"times", spec.times},
                           {"n_points", 401}};
    manifest.outputs = outputs;
    manifest.duration_seconds = now_seconds(start);
    write_text_file(stem + "_manifest.json", to_json(manifest).dump(2) + "\n");

    for (const auto& p : outputs) std::printf("wrote %s\n", p.c_str());
    std::printf("wrote %s\n", (stem + "_manifest.json").c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"catalog of exactly solvable reaction-diffusion systems with numerical oracles"};
    app.require_subcommand(1);

    bool list_json = false;
    std::string list_family;
    auto* list_cmd = app.add_subcommand("list", "print the system catalog");
    list_cmd->add_flag("--json", list_json, "emit a JSON array instead of a table");
    list_cmd->add_option("--family", list_family, "filter: conserving or growth")
        ->check(CLI::IsMember({"conserving", "growth"}));

    VerifyOptions vopt;
    auto* verify_cmd = app.add_subcommand("verify", "run numerical oracles on a system");
    verify_cmd->add_option("system", vopt.system, "catalog system name")->required();
    verify_cmd->add_option("params", vopt.params, "key=value parameter overrides");
    verify_cmd->add_option("--checks", vopt.checks,
                           "comma list of ode,first-integral,pde,conservation,identity,scale "
                           "(default: all)");
    verify_cmd->add_option("--deriv", vopt.deriv, "profile derivatives: auto, analytic, fd")
        ->check(CLI::IsMember({"auto", "analytic", "fd"}));
    verify_cmd->add_flag("--json", vopt.json_out, "emit one JSON report object");
    verify_cmd->add_option("--tol-ode", vopt.tol.ode, "reduced-ODE residual tolerance");
    verify_cmd->add_option("--tol-first-integral", vopt.tol.first_integral,
                           "first-integral residual tolerance");
    verify_cmd->add_option("--tol-pde", vopt.tol.pde, "PDE residual tolerance");
    verify_cmd->add_option("--tol-conservation", vopt.tol.conservation,
                           "N(t) exponent-fit tolerance");
    verify_cmd->add_option("--tol-identity", vopt.tol.identity, "continuity-identity tolerance");
    verify_cmd->add_option("--tol-scale", vopt.tol.scale, "scale-invariance tolerance");

    SimulateOptions sopt;
    auto* sim_cmd = app.add_subcommand("simulate", "evolve a system and compare to closed form");
    sim_cmd->add_option("system", sopt.system, "catalog system name")->required();
    sim_cmd->add_option("params", sopt.params, "key=value parameter overrides");
    sim_cmd->add_option("--t0", sopt.t0, "start time (> 0)");
    sim_cmd->add_option("--t1", sopt.t1, "end time");
    sim_cmd->add_option("--xmin", sopt.xmin, "left grid edge");
    sim_cmd->add_option("--xmax", sopt.xmax, "right grid edge");
    sim_cmd->add_option("--n", sopt.n, "number of grid cells");
    sim_cmd->add_option("--dt", sopt.dt, "time step");
    sim_cmd->add_option("--theta", sopt.theta, "scheme weight (0.5 = Crank-Nicolson)");
    sim_cmd->add_option("--tol", sopt.tol, "l2_relative pass threshold (default 1e-2)");
    sim_cmd->add_option("--boundary", sopt.boundary,
                        "analytic-dirichlet or homogeneous-dirichlet")
        ->check(CLI::IsMember({"analytic-dirichlet", "homogeneous-dirichlet"}));
    sim_cmd->add_option("--out-dir", sopt.out_dir, "output directory (default $RD_OUT_DIR or .)");
    sim_cmd->add_flag("--json", sopt.json_out, "emit the comparison report as JSON");

    int fig_which = 0;
    std::string fig_out;
    auto* fig_cmd = app.add_subcommand("figure", "emit the data behind one of the four figures");
    fig_cmd->add_option("which", fig_which, "figure number (1..4)")
        ->required()
        ->check(CLI::Range(1, 4));
    fig_cmd->add_option("--out-dir", fig_out, "output directory (default $RD_OUT_DIR or .)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (list_cmd->parsed()) return cmd_list(list_json, list_family);
        if (verify_cmd->parsed()) return cmd_verify(vopt);
        if (sim_cmd->parsed()) return cmd_simulate(sopt);
        if (fig_cmd->parsed()) return cmd_figure(fig_which, fig_out);
    } catch (const ParamConstraintViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownSystemError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DegenerateParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ContractError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SolverAbort& e) {
        std::cerr << "solver abort at step " << e.step << ": " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
