#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "merf/operators.hpp"

namespace merf {

enum class InitialGuess { Erf, ConstantOne };

struct SolverConfig {
    double tol_fixed_point = 1e-12;  // sup-norm stationarity tolerance
    int max_iter = 200;
    InitialGuess start = InitialGuess::Erf;
    std::optional<GridFunction> initial_guess;  // overrides `start` when set
    bool enforce_threshold = true;  // refuse delta at or above the contraction threshold
};

struct SolveResult {
    GridFunction solution;
    int iterations = 0;
    double residual = 0.0;              // ||T(y) - y||_inf of the returned y, measured
    double contraction_estimate = 0.0;  // max ||d_{k+1}|| / ||d_k|| observed
    double y0 = 0.0;
    double yprime0 = 0.0;
    double c0 = 0.0;
    std::vector<double> increments;  // node-to-node increments of `solution`
    bool within_theory = true;       // delta below the applicable threshold
};

class ThresholdViolation : public std::runtime_error {
  public:
    ThresholdViolation(double delta, double threshold_root);
    double delta() const noexcept { return delta_; }
    double threshold_root() const noexcept { return threshold_; }

  private:
    double delta_;
    double threshold_;
};

// Carries the last iterate; never a silent success.
class NoConvergence : public std::runtime_error {
  public:
    explicit NoConvergence(SolveResult last);
    const SolveResult& last() const noexcept { return last_; }

  private:
    SolveResult last_;
};

// Picard iteration of the applicable integral operator to sup-norm
// stationarity. The returned residual is a genuine ||T(y) - y||_inf of the
// returned y (one extra application at acceptance).
SolveResult picard_solve(const ProblemSpec& spec, const QuadratureConfig& qcfg,
                         const SolverConfig& scfg = {});
SolveResult picard_solve(const ProblemSpec& spec);

// Explicit gap functions. Each is increasing with value 0 at 0; the
// operator is a contraction below the unit root, with the gap value as the
// Lipschitz bound.
double gap_robin(double x, double gamma, double p);
double gap_dirichlet(double x, double p);
// Rate constant of the large-gamma limit; its unit root bounds the region
// where the 1/gamma error constant is finite.
double gap_limit_rate(double x, double p);
double gap_neumann(double x, double p);

enum class ThresholdKind { RobinGamma, DirichletStar, LimitRate, NeumannStar };

struct ThresholdResult {
    ThresholdKind kind{};
    double delta_root = 0.0;
    std::pair<double, double> bracket{0.0, 0.0};
};

// Unit root of the selected gap function by bisection on a doubling
// bracket; |gap(root) - 1| <= 1e-12 and bracket width <= 1e-12.
ThresholdResult threshold(ThresholdKind kind, double p, double gamma = 0.0);

// Root of the gap function matching spec's boundary condition.
double threshold_for(const ProblemSpec& spec);
double gap_for(const ProblemSpec& spec, double x);

std::string to_string(ThresholdKind kind);

}  // namespace merf
