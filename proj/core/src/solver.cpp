#include "merf/solver.hpp"

#include <cmath>

#include "merf/constants.hpp"

namespace merf {

namespace {

// Ratios of successive iterate differences are only meaningful while the
// differences sit well above rounding noise.
constexpr double kRatioFloor = 1e-13;

GridFunction initial_iterate(const std::vector<double>& grid, const SolverConfig& scfg) {
    if (scfg.initial_guess) {
        const GridFunction& g = *scfg.initial_guess;
        if (g.grid.size() != grid.size() || g.grid.back() != grid.back())
            throw std::invalid_argument("picard_solve: initial guess is not on the solver grid");
        if (!in_candidate_set(g))
            throw std::invalid_argument("picard_solve: initial guess is not in the candidate set");
        return g;
    }
    GridFunction h;
    h.grid = grid;
    h.tail_value = 1.0;
    h.values.resize(grid.size());
    if (scfg.start == InitialGuess::ConstantOne) {
        for (double& v : h.values) v = 1.0;
    } else {
        for (std::size_t i = 0; i < grid.size(); ++i) h.values[i] = std::erf(grid[i]);
    }
    return h;
}

}  // namespace

ThresholdViolation::ThresholdViolation(double delta, double threshold_root)
    : std::runtime_error("delta = " + std::to_string(delta) +
                         " is at or above the contraction threshold " +
                         std::to_string(threshold_root)),
      delta_(delta),
      threshold_(threshold_root) {}

NoConvergence::NoConvergence(SolveResult last)
    : std::runtime_error("no convergence after " + std::to_string(last.iterations) +
                         " iterations (residual " + std::to_string(last.residual) + ")"),
      last_(std::move(last)) {}

SolveResult picard_solve(const ProblemSpec& spec, const QuadratureConfig& qcfg,
                         const SolverConfig& scfg) {
    spec.validate();
    qcfg.validate(spec.delta);
    if (!(scfg.tol_fixed_point > 0.0))
        throw std::invalid_argument("picard_solve: tol_fixed_point must be > 0");
    if (scfg.max_iter < 1) throw std::invalid_argument("picard_solve: max_iter must be >= 1");

    const double root = threshold_for(spec);
    const bool within = spec.delta < root;
    if (!within && scfg.enforce_threshold) throw ThresholdViolation(spec.delta, root);

    const auto grid = make_uniform_grid(qcfg);
    GridFunction cur = initial_iterate(grid, scfg);

    SolveResult res;
    res.within_theory = within;
    res.y0 = cur.values.front();

    double prev_diff = -1.0;
    for (int k = 1; k <= scfg.max_iter; ++k) {
        OperatorOutput out = apply_operator(cur, spec);
        const double diff = sup_distance(out.image, cur);
        if (prev_diff >= kRatioFloor)
            res.contraction_estimate = std::max(res.contraction_estimate, diff / prev_diff);
        prev_diff = diff;

        cur = std::move(out.image);
        res.y0 = out.y0;
        res.c0 = out.c0;
        res.yprime0 = out.yprime0;
        res.increments = std::move(out.increments);
        res.iterations = k;

        if (diff <= scfg.tol_fixed_point) {
            OperatorOutput check = apply_operator(cur, spec);
            res.residual = sup_distance(check.image, cur);
            if (res.residual <= scfg.tol_fixed_point) {
                res.solution = std::move(cur);
                return res;
            }
            // Keep iterating; only reachable when the map fails to contract.
        }
        res.residual = diff;
    }
    res.solution = std::move(cur);
    throw NoConvergence(std::move(res));
}

SolveResult picard_solve(const ProblemSpec& spec) {
    return picard_solve(spec, default_quadrature(spec.delta), SolverConfig{});
}

double gap_robin(double x, double gamma, double p) {
    const double s = std::pow(1.0 + x, 1.5);
    return x * p * s * ((2.0 + x) * (1.0 + s) + 2.0 * (1.0 + x) / (gamma * kSqrtPi));
}

double gap_dirichlet(double x, double p) {
    const double s = std::pow(1.0 + x, 1.5);
    return x * p * s * (2.0 + x) * (1.0 + s);
}

double gap_limit_rate(double x, double p) {
    const double u = 1.0 + x;
    return 2.0 * x * p * u * u * u * (2.0 + x);
}

double gap_neumann(double x, double p) {
    return x * (p / kSqrtPi) *
           ((1.0 + x) * (std::sqrt(1.0 + x) * std::exp(-0.25) + kSqrtPi) + kSqrtPi);
}

ThresholdResult threshold(ThresholdKind kind, double p, double gamma) {
    if (!(p >= 1.0)) throw std::invalid_argument("threshold: p must be >= 1");
    if (kind == ThresholdKind::RobinGamma && !(gamma > 0.0))
        throw std::invalid_argument("threshold: Robin kind needs gamma > 0");

    const auto gap = [&](double x) {
        switch (kind) {
            case ThresholdKind::RobinGamma: return gap_robin(x, gamma, p);
            case ThresholdKind::DirichletStar: return gap_dirichlet(x, p);
            case ThresholdKind::LimitRate: return gap_limit_rate(x, p);
            case ThresholdKind::NeumannStar: return gap_neumann(x, p);
        }
        return 0.0;
    };

    double lo = 0.0, hi = 1.0;
    int doublings = 0;
    while (gap(hi) < 1.0 && doublings++ < 64) hi *= 2.0;
    for (int i = 0; i < 200 && (hi - lo) > 1e-15; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (gap(mid) < 1.0)
            lo = mid;
        else
            hi = mid;
    }
    return ThresholdResult{kind, 0.5 * (lo + hi), {lo, hi}};
}

double threshold_for(const ProblemSpec& spec) {
    if (const auto* r = std::get_if<RobinCondition>(&spec.bc))
        return threshold(ThresholdKind::RobinGamma, spec.p, r->gamma).delta_root;
    if (spec.is_dirichlet()) return threshold(ThresholdKind::DirichletStar, spec.p).delta_root;
    return threshold(ThresholdKind::NeumannStar, spec.p).delta_root;
}

double gap_for(const ProblemSpec& spec, double x) {
    if (const auto* r = std::get_if<RobinCondition>(&spec.bc)) return gap_robin(x, r->gamma, spec.p);
    if (spec.is_dirichlet()) return gap_dirichlet(x, spec.p);
    return gap_neumann(x, spec.p);
}

std::string to_string(ThresholdKind kind) {
    switch (kind) {
        case ThresholdKind::RobinGamma: return "robin";
        case ThresholdKind::DirichletStar: return "dirichlet";
        case ThresholdKind::LimitRate: return "chat";
        case ThresholdKind::NeumannStar: return "neumann";
    }
    return "?";
}

}  // namespace merf
