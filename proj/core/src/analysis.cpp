#include "merf/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "merf/constants.hpp"

namespace merf {

double dirichlet_limit_error_bound(double gamma, double delta, double p) {
    const double rate = gap_limit_rate(delta, p);
    if (!(rate < 1.0))
        throw std::invalid_argument("dirichlet_limit_error_bound: rate constant is >= 1");
    return (1.0 / gamma) * 2.0 * std::pow(1.0 + delta, 2.5) / (kSqrtPi * (1.0 - rate));
}

ConvergenceReport convergence_study(double p, double delta, const std::vector<double>& gammas,
                                    const QuadratureConfig& qcfg, const SolverConfig& scfg) {
    if (gammas.size() < 3)
        throw std::invalid_argument("convergence_study: need at least 3 gamma values");
    for (std::size_t i = 0; i < gammas.size(); ++i) {
        if (!(gammas[i] > 0.0))
            throw std::invalid_argument("convergence_study: gammas must be positive");
        if (i > 0 && gammas[i] <= gammas[i - 1])
            throw std::invalid_argument("convergence_study: gammas must be increasing");
    }
    const double rate_root = threshold(ThresholdKind::LimitRate, p).delta_root;
    if (!(delta < rate_root)) throw ThresholdViolation(delta, rate_root);

    ConvergenceReport rep;
    rep.p = p;
    rep.delta = delta;
    rep.gammas = gammas;

    const SolveResult star = picard_solve(dirichlet_problem(p, delta), qcfg, scfg);
    for (double gamma : gammas) {
        const SolveResult yg = picard_solve(robin_problem(p, delta, gamma), qcfg, scfg);
        rep.errors.push_back(sup_distance(yg.solution, star.solution));
        rep.bound_values.push_back(dirichlet_limit_error_bound(gamma, delta, p));
    }

    // Least-squares slope of log(error) vs log(gamma); the smallest gamma is
    // pre-asymptotic and excluded.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const auto n = static_cast<double>(gammas.size() - 1);
    for (std::size_t i = 1; i < gammas.size(); ++i) {
        const double lx = std::log(gammas[i]);
        const double ly = std::log(rep.errors[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    rep.fitted_order = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return rep;
}

BoundViolation::BoundViolation(std::string item, double slack)
    : std::runtime_error("perturbation bound '" + item + "' violated (slack " +
                         std::to_string(slack) + ")"),
      item_(std::move(item)),
      slack_(slack) {}

double BoundReport::worst_slack() const {
    double w = std::numeric_limits<double>::infinity();
    for (const auto& c : checks) w = std::min(w, c.worst_slack);
    return w;
}

namespace {

std::vector<double> cumulative_abs_diff(const std::vector<double>& grid,
                                        const std::vector<double>& a,
                                        const std::vector<double>& b) {
    std::vector<double> out(grid.size(), 0.0);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double fa = std::abs(a[i] - b[i]);
        const double fb = std::abs(a[i - 1] - b[i - 1]);
        out[i] = out[i - 1] + 0.5 * (fa + fb) * (grid[i] - grid[i - 1]);
    }
    return out;
}

}  // namespace

BoundReport verify_perturbation_bounds(double p, double delta, int trials,
                                       const QuadratureConfig& qcfg, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("verify_perturbation_bounds: trials must be >= 1");
    if (!(p >= 1.0) || !(delta >= 0.0))
        throw std::invalid_argument("verify_perturbation_bounds: need p >= 1, delta >= 0");
    qcfg.validate(delta);

    const auto grid = make_uniform_grid(qcfg);
    std::mt19937_64 rng(seed);
    const double a = 1.0 + delta;
    const ProblemSpec probe = dirichlet_problem(p, delta);  // only p/delta are used below

    BoundReport rep;
    rep.p = p;
    rep.delta = delta;
    rep.trials = trials;
    rep.checks = {{"psi-reciprocal", std::numeric_limits<double>::infinity()},
                  {"inner-exponential", std::numeric_limits<double>::infinity()},
                  {"kernel-l1", std::numeric_limits<double>::infinity()},
                  {"offset-reciprocal-integral", std::numeric_limits<double>::infinity()},
                  {"reciprocal-integral", std::numeric_limits<double>::infinity()}};
    BoundCheck& chk_psi = rep.checks[0];
    BoundCheck& chk_exp = rep.checks[1];
    BoundCheck& chk_l1 = rep.checks[2];
    BoundCheck& chk_offset = rep.checks[3];
    BoundCheck& chk_recip = rep.checks[4];

    for (int t = 0; t < trials; ++t) {
        const GridFunction y1 = random_candidate(rng, grid, false);
        const GridFunction y2 = random_candidate(rng, grid, false);
        const double dist = sup_distance(y1, y2);

        const auto P1 = psi_values(y1, probe);
        const auto P2 = psi_values(y2, probe);
        const auto I1 = inner_cumulative(y1, probe);
        const auto I2 = inner_cumulative(y2, probe);
        const auto K1 = kernel_integrals(y1, probe);
        const auto K2 = kernel_integrals(y2, probe);

        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double x = grid[i];
            chk_psi.worst_slack = std::min(
                chk_psi.worst_slack, delta * p * dist - std::abs(1.0 / P1[i] - 1.0 / P2[i]));
            const double lhs_exp = std::abs(std::exp(-2.0 * I1[i]) - std::exp(-2.0 * I2[i]));
            const double rhs_exp = 2.0 * delta * p * x * x * std::exp(-x * x / a) * dist;
            chk_exp.worst_slack = std::min(chk_exp.worst_slack, rhs_exp - lhs_exp);
        }

        const auto l1 = cumulative_abs_diff(grid, K1.f.values, K2.f.values);
        const double rhs_l1 = (kSqrtPi / 2.0) * delta * p * std::sqrt(a) * (2.0 + delta) * dist;
        chk_l1.worst_slack = std::min(chk_l1.worst_slack,
                                      rhs_l1 - *std::max_element(l1.begin(), l1.end()));

        const double gamma = 1.0;
        const double lhs_off =
            std::abs(1.0 / (1.0 + gamma * K1.total) - 1.0 / (1.0 + gamma * K2.total));
        const double rhs_off =
            2.0 * std::pow(a, 2.5) / (gamma * kSqrtPi) * delta * p * (2.0 + delta) * dist;
        chk_offset.worst_slack = std::min(chk_offset.worst_slack, rhs_off - lhs_off);

        // Star pair for the plain reciprocal-integral estimate.
        const GridFunction z1 = random_candidate(rng, grid, true);
        const GridFunction z2 = random_candidate(rng, grid, true);
        const double dist_star = sup_distance(z1, z2);
        const double S1 = integral_0_to_inf(z1, probe);
        const double S2 = integral_0_to_inf(z2, probe);
        const double lhs_star = std::abs(1.0 / S1 - 1.0 / S2);
        const double rhs_star =
            2.0 * std::pow(a, 2.5) / kSqrtPi * delta * p * (2.0 + delta) * dist_star;
        chk_recip.worst_slack = std::min(chk_recip.worst_slack, rhs_star - lhs_star);
    }

    for (const auto& c : rep.checks)
        if (c.worst_slack < -kBoundSlackTol) throw BoundViolation(c.item, c.worst_slack);
    return rep;
}

GridFunction closed_form_delta0(const ProblemSpec& spec, const std::vector<double>& grid) {
    spec.validate();
    if (spec.delta != 0.0)
        throw std::invalid_argument("closed_form_delta0: requires delta = 0");

    GridFunction out;
    out.grid = grid;
    out.tail_value = 1.0;
    out.values.resize(grid.size());
    if (const auto* r = std::get_if<RobinCondition>(&spec.bc)) {
        const double denom = 1.0 + r->gamma * kSqrtPi / 2.0;
        for (std::size_t i = 0; i < grid.size(); ++i)
            out.values[i] = (1.0 + r->gamma * (kSqrtPi / 2.0) * std::erf(grid[i])) / denom;
    } else if (spec.is_dirichlet()) {
        for (std::size_t i = 0; i < grid.size(); ++i) out.values[i] = std::erf(grid[i]);
    } else {
        const double gs = std::get<NeumannCondition>(spec.bc).gamma_star;
        for (std::size_t i = 0; i < grid.size(); ++i)
            out.values[i] = 1.0 - gs * (kSqrtPi / 2.0) * std::erfc(grid[i]);
    }
    return out;
}

GridFunction random_candidate(std::mt19937_64& rng, const std::vector<double>& grid, bool star) {
    const double xmax = grid.back();
    std::uniform_int_distribution<int> bumps(1, 3);
    std::uniform_real_distribution<double> uw(0.2, 1.0);
    std::uniform_real_distribution<double> uc(0.0, 0.6 * xmax);
    std::uniform_real_distribution<double> us(0.2, 1.5);
    std::uniform_real_distribution<double> u01(0.0, 1.0);

    const int m = bumps(rng);
    const double offset = star ? 0.0 : u01(rng);
    std::vector<double> w(m), c(m), s(m);
    for (int k = 0; k < m; ++k) {
        w[k] = uw(rng);
        c[k] = uc(rng);
        s[k] = us(rng);
    }

    GridFunction h;
    h.grid = grid;
    h.tail_value = 1.0;
    h.values.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double cum = offset;
        for (int k = 0; k < m; ++k)
            cum += w[k] * s[k] * (kSqrtPi / 2.0) *
                   (std::erf((grid[i] - c[k]) / s[k]) - std::erf(-c[k] / s[k]));
        h.values[i] = cum;
    }
    const double norm = h.values.back();
    for (double& v : h.values) v = std::min(1.0, std::max(0.0, v / norm));
    h.values.back() = 1.0;
    if (star) h.values.front() = 0.0;
    return h;
}

}  // namespace merf
