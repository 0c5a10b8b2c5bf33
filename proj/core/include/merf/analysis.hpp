#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "merf/solver.hpp"

namespace merf {

// Sup-norm gap between the Robin solutions and the Dirichlet solution over
// a sweep of increasing gamma, with the explicit 1/gamma bound per entry.
struct ConvergenceReport {
    double p = 1.0;
    double delta = 0.0;
    std::vector<double> gammas;
    std::vector<double> errors;
    std::vector<double> bound_values;
    double fitted_order = 0.0;  // log-log slope, smallest gamma excluded
};

// (1/gamma) 2 (1+delta)^{5/2} / (sqrt(pi) (1 - R(delta))) with R the
// limit-rate gap; requires R(delta) < 1.
double dirichlet_limit_error_bound(double gamma, double delta, double p);

// Solves the Dirichlet problem once and each Robin problem, all on the
// shared grid. Requires delta below the limit-rate root (and every solve
// enforces its own threshold).
ConvergenceReport convergence_study(double p, double delta, const std::vector<double>& gammas,
                                    const QuadratureConfig& qcfg, const SolverConfig& scfg = {});

class BoundViolation : public std::runtime_error {
  public:
    BoundViolation(std::string item, double slack);
    const std::string& item() const noexcept { return item_; }
    double slack() const noexcept { return slack_; }

  private:
    std::string item_;
    double slack_;
};

struct BoundCheck {
    std::string item;
    double worst_slack = 0.0;  // min over trials/nodes of (bound - |lhs|)
};

struct BoundReport {
    double p = 1.0;
    double delta = 0.0;
    int trials = 0;
    std::vector<BoundCheck> checks;
    double worst_slack() const;
};

// Quadrature slack allowed when testing the perturbation estimates.
inline constexpr double kBoundSlackTol = 1e-9;

// Draws random candidate pairs and checks the kernel perturbation
// estimates (reciprocal conductivity, inner exponential, kernel L1
// distance, and both reciprocal-integral offsets) pointwise/integrally.
// Throws BoundViolation if any slack drops below -kBoundSlackTol.
BoundReport verify_perturbation_bounds(double p, double delta, int trials,
                                       const QuadratureConfig& qcfg,
                                       std::uint64_t seed = 0x5eedULL);

// Analytic delta = 0 solution sampled on `grid`:
//   Robin    (1 + gamma (sqrt(pi)/2) erf x) / (1 + gamma sqrt(pi)/2)
//   Dirichlet erf x
//   Neumann  1 - gamma* (sqrt(pi)/2) erfc x
GridFunction closed_form_delta0(const ProblemSpec& spec, const std::vector<double>& grid);

// Smooth random element of the candidate set: a normalized cumulative of a
// random Gaussian bump mixture, optionally pinned to 0 at x = 0.
GridFunction random_candidate(std::mt19937_64& rng, const std::vector<double>& grid, bool star);

}  // namespace merf
