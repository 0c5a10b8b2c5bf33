#include "cli_app.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "merf/analysis.hpp"
#include "merf/physical.hpp"

namespace merf::cli {

namespace {

using nlohmann::json;

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// stdout by default, --output PATH otherwise.
class Sink {
  public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open output file: " + path);
        }
    }
    std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

struct SolveOptions {
    std::string bc = "dirichlet";
    double p = 1.0;
    double delta = 0.0;
    double gamma = 1.0;
    double gamma_star = 0.5;
    double tol = 1e-12;
    int max_iter = 200;
    double x_max = 0.0;  // 0 = default 6 sqrt(1+delta)
    std::size_t grid_points = 2001;
    bool force = false;

    ProblemSpec problem() const {
        if (bc == "robin") return robin_problem(p, delta, gamma);
        if (bc == "dirichlet") return dirichlet_problem(p, delta);
        return neumann_problem(p, delta, gamma_star);
    }
    QuadratureConfig quadrature() const {
        QuadratureConfig q = default_quadrature(delta);
        q.n_points = grid_points;
        if (x_max > 0.0) q.x_max = x_max;
        return q;
    }
    SolverConfig solver() const {
        SolverConfig s;
        s.tol_fixed_point = tol;
        s.max_iter = max_iter;
        s.enforce_threshold = !force;
        return s;
    }
};

json problem_meta(const SolveOptions& o, const QuadratureConfig& q) {
    json meta{{"bc", o.bc},          {"p", o.p},
              {"delta", o.delta},    {"tol_fixed_point", o.tol},
              {"max_iter", o.max_iter}, {"n_points", q.n_points},
              {"x_max", q.x_max},    {"tail_tol", q.tail_tol}};
    if (o.bc == "robin") meta["gamma"] = o.gamma;
    if (o.bc == "neumann") meta["gamma_star"] = o.gamma_star;
    return meta;
}

int do_solve(const SolveOptions& o, const std::string& format, const std::string& output) {
    const ProblemSpec spec = o.problem();
    const QuadratureConfig qcfg = o.quadrature();
    const SolveResult res = picard_solve(spec, qcfg, o.solver());

    GridFunction dy = kernel_f(res.solution, spec);
    for (double& v : dy.values) v *= res.c0;

    Sink sink(output);
    if (format == "json") {
        json meta = problem_meta(o, qcfg);
        meta["iterations"] = res.iterations;
        meta["residual"] = res.residual;
        meta["contraction_estimate"] = res.contraction_estimate;
        meta["y0"] = res.y0;
        meta["yprime0"] = res.yprime0;
        meta["within_theory"] = res.within_theory;
        json data{{"x", res.solution.grid}, {"y", res.solution.values}, {"dy", dy.values}};
        sink.out() << json{{"meta", meta}, {"data", data}}.dump(2) << "\n";
    } else {
        sink.out() << "x,y,dy\n";
        for (std::size_t i = 0; i < res.solution.size(); ++i)
            sink.out() << fmt17(res.solution.grid[i]) << ',' << fmt17(res.solution.values[i])
                       << ',' << fmt17(dy.values[i]) << "\n";
    }
    if (!res.within_theory)
        std::cerr << "warning: delta is outside the contraction theory; result is empirical\n";
    return 0;
}

int do_threshold(const std::string& kind_name, double p, double gamma, const std::string& format,
                 const std::string& output) {
    ThresholdKind kind;
    if (kind_name == "robin")
        kind = ThresholdKind::RobinGamma;
    else if (kind_name == "dirichlet")
        kind = ThresholdKind::DirichletStar;
    else if (kind_name == "chat")
        kind = ThresholdKind::LimitRate;
    else
        kind = ThresholdKind::NeumannStar;

    const ThresholdResult res = threshold(kind, p, gamma);
    Sink sink(output);
    if (format == "json") {
        json meta{{"kind", kind_name}, {"p", p}};
        if (kind == ThresholdKind::RobinGamma) meta["gamma"] = gamma;
        json data{{"delta_root", res.delta_root},
                  {"bracket", {res.bracket.first, res.bracket.second}}};
        sink.out() << json{{"meta", meta}, {"data", data}}.dump(2) << "\n";
    } else {
        sink.out() << "delta_root = " << fmt17(res.delta_root) << "\n"
                   << "bracket = [" << fmt17(res.bracket.first) << ", "
                   << fmt17(res.bracket.second) << "]\n";
    }
    return 0;
}

int do_convergence(const SolveOptions& o, const std::vector<double>& gammas,
                   const std::string& format, const std::string& output) {
    const QuadratureConfig qcfg = o.quadrature();
    SolverConfig scfg = o.solver();
    const ConvergenceReport rep = convergence_study(o.p, o.delta, gammas, qcfg, scfg);

    Sink sink(output);
    if (format == "json") {
        json meta{{"p", o.p},       {"delta", o.delta},       {"tol_fixed_point", o.tol},
                  {"max_iter", o.max_iter}, {"n_points", qcfg.n_points}, {"x_max", qcfg.x_max}};
        json data{{"gamma", rep.gammas},
                  {"error", rep.errors},
                  {"bound", rep.bound_values},
                  {"fitted_order", rep.fitted_order}};
        sink.out() << json{{"meta", meta}, {"data", data}}.dump(2) << "\n";
    } else {
        sink.out() << "gamma,error,bound\n";
        for (std::size_t i = 0; i < rep.gammas.size(); ++i)
            sink.out() << fmt17(rep.gammas[i]) << ',' << fmt17(rep.errors[i]) << ','
                       << fmt17(rep.bound_values[i]) << "\n";
        std::cerr << "fitted_order = " << fmt17(rep.fitted_order) << "\n";
    }
    return 0;
}

int do_verify(double p, double delta, int trials, std::uint64_t seed, const std::string& format,
              const std::string& output) {
    const QuadratureConfig qcfg = default_quadrature(delta);
    const BoundReport rep = verify_perturbation_bounds(p, delta, trials, qcfg, seed);

    Sink sink(output);
    if (format == "json") {
        json checks = json::array();
        for (const auto& c : rep.checks)
            checks.push_back({{"item", c.item}, {"worst_slack", c.worst_slack}});
        json meta{{"p", p}, {"delta", delta}, {"trials", trials}};
        sink.out() << json{{"meta", meta}, {"data", {{"checks", checks}, {"ok", true}}}}.dump(2)
                   << "\n";
    } else {
        for (const auto& c : rep.checks)
            sink.out() << c.item << ": worst slack = " << fmt17(c.worst_slack) << "\n";
        sink.out() << "ok (p=" << p << ", delta=" << delta << ", trials=" << trials << ")\n";
    }
    return 0;
}

int do_physical(const PhysicalParams& params, const std::string& which,
                const std::string& format, const std::string& output) {
    const CoefficientKind kind =
        which == "robin" ? CoefficientKind::Robin : CoefficientKind::Neumann;
    const double value = physical_to_gamma(params, kind);

    Sink sink(output);
    if (format == "json") {
        json data{{which == "robin" ? "gamma" : "gamma_star", value},
                  {"alpha0", thermal_diffusivity(params)}};
        sink.out() << json{{"meta", {{"which", which}}}, {"data", data}}.dump(2) << "\n";
    } else {
        sink.out() << (which == "robin" ? "gamma = " : "gamma_star = ") << fmt17(value) << "\n";
    }
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Generalized modified error function solver"};
    app.require_subcommand(1);
    app.fallthrough();  // lets --config appear after the subcommand name
    app.set_config("--config", "", "Config file (flags take precedence)");

    SolveOptions opt;
    std::string format = "csv";
    std::string output;
    std::vector<double> gammas;
    std::string kind = "dirichlet";
    int trials = 100;
    std::uint64_t seed = 0x5eedULL;
    PhysicalParams phys;
    std::string which = "robin";

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--output", output, "Write output to a file instead of stdout");
    };
    auto add_problem = [&](CLI::App* cmd) {
        cmd->add_option("--p", opt.p, "Conductivity exponent (>= 1)");
        cmd->add_option("--delta", opt.delta, "Conductivity slope (>= 0)");
        cmd->add_option("--tol", opt.tol, "Fixed-point tolerance");
        cmd->add_option("--max-iter", opt.max_iter, "Iteration cap");
        cmd->add_option("--x-max", opt.x_max, "Truncation abscissa (default 6 sqrt(1+delta))");
        cmd->add_option("--grid-points", opt.grid_points, "Grid nodes (default 2001)");
    };

    CLI::App* solve = app.add_subcommand("solve", "Solve one boundary-value problem");
    solve->add_option("--bc", opt.bc, "Boundary condition at x = 0")
        ->check(CLI::IsMember({"robin", "dirichlet", "neumann"}));
    solve->add_option("--gamma", opt.gamma, "Robin coefficient");
    solve->add_option("--gamma-star", opt.gamma_star, "Neumann coefficient");
    solve->add_flag("--force", opt.force, "Solve even at/above the contraction threshold");
    add_problem(solve);
    add_common(solve);

    CLI::App* thr = app.add_subcommand("threshold", "Admissibility threshold for delta");
    thr->add_option("--kind", kind, "Which gap function")
        ->required()
        ->check(CLI::IsMember({"robin", "dirichlet", "chat", "neumann"}));
    thr->add_option("--p", opt.p, "Conductivity exponent (>= 1)");
    thr->add_option("--gamma", opt.gamma, "Robin coefficient (kind = robin)");
    add_common(thr);

    CLI::App* conv = app.add_subcommand("convergence", "Robin-to-Dirichlet gamma sweep");
    conv->add_option("--gammas", gammas, "Increasing gamma values")
        ->required()
        ->delimiter(',');
    add_problem(conv);
    add_common(conv);

    CLI::App* ver = app.add_subcommand("verify", "Check the perturbation bounds");
    ver->add_option("--p", opt.p, "Conductivity exponent (>= 1)");
    ver->add_option("--delta", opt.delta, "Conductivity slope (>= 0)");
    ver->add_option("--trials", trials, "Random pairs per check");
    ver->add_option("--seed", seed, "RNG seed");
    add_common(ver);

    CLI::App* phy = app.add_subcommand("physical", "Map physical parameters to gamma");
    phy->add_option("--which", which, "Which coefficient")
        ->check(CLI::IsMember({"robin", "neumann"}));
    phy->add_option("--k0", phys.k0, "Reference conductivity");
    phy->add_option("--rho", phys.rho, "Density");
    phy->add_option("--c", phys.c, "Specific heat");
    phy->add_option("--h-coef", phys.h_coef, "Heat transfer coefficient (Robin)");
    phy->add_option("--q0", phys.q0, "Flux coefficient (Neumann)");
    phy->add_option("--tf", phys.Tf, "Phase-change temperature");
    phy->add_option("--t0", phys.T0, "Bulk temperature");
    add_common(phy);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve->parsed()) return do_solve(opt, format, output);
        if (thr->parsed()) {
            if (kind == "robin" && !thr->count("--gamma")) {
                std::cerr << "threshold --kind robin requires --gamma\n";
                return 2;
            }
            return do_threshold(kind, opt.p, opt.gamma, format, output);
        }
        if (conv->parsed()) return do_convergence(opt, gammas, format, output);
        if (ver->parsed()) return do_verify(opt.p, opt.delta, trials, seed, format, output);
        if (phy->parsed()) return do_physical(phys, which, format, output);
        return 2;
    } catch (const ThresholdViolation& e) {
        std::cerr << "error: " << e.what() << " (pass --force to solve anyway)\n";
        return 3;
    } catch (const NoConvergence& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const BoundViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const NonPositiveParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace merf::cli
