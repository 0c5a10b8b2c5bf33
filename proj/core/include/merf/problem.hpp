#pragma once

#include <variant>

namespace merf {

// Boundary data imposed at x = 0. The condition at infinity is always
// y(+inf) = 1.
struct RobinCondition {
    double gamma = 1.0;  // (1 + delta y^p(0)) y'(0) = gamma y(0)
};

struct DirichletCondition {};  // y(0) = 0

struct NeumannCondition {
    double gamma_star = 0.5;  // (1 + delta y^p(0)) y'(0) = gamma_star
};

using BoundaryCondition = std::variant<RobinCondition, DirichletCondition, NeumannCondition>;

// Largest Neumann coefficient for which the integral operator maps the
// candidate set into itself: 2 / sqrt(pi (1 + delta)).
double neumann_coefficient_limit(double delta);

// One instance of [(1 + delta y^p) y']' + 2 x y' = 0 on (0, inf).
struct ProblemSpec {
    double p = 1.0;      // conductivity exponent, p >= 1
    double delta = 0.0;  // conductivity slope, delta >= 0
    BoundaryCondition bc = DirichletCondition{};

    bool is_robin() const noexcept { return std::holds_alternative<RobinCondition>(bc); }
    bool is_dirichlet() const noexcept { return std::holds_alternative<DirichletCondition>(bc); }
    bool is_neumann() const noexcept { return std::holds_alternative<NeumannCondition>(bc); }

    // p >= 1, delta >= 0, gamma > 0, 0 < gamma_star <= neumann limit.
    // Throws std::invalid_argument.
    void validate() const;
};

ProblemSpec robin_problem(double p, double delta, double gamma);
ProblemSpec dirichlet_problem(double p, double delta);
ProblemSpec neumann_problem(double p, double delta, double gamma_star);

}  // namespace merf
