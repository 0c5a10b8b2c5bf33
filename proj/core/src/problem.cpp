#include "merf/problem.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace merf {

double neumann_coefficient_limit(double delta) {
    return 2.0 / std::sqrt(std::numbers::pi * (1.0 + delta));
}

void ProblemSpec::validate() const {
    if (!(p >= 1.0) || !std::isfinite(p))
        throw std::invalid_argument("ProblemSpec: p must be >= 1");
    if (!(delta >= 0.0) || !std::isfinite(delta))
        throw std::invalid_argument("ProblemSpec: delta must be >= 0");
    if (const auto* r = std::get_if<RobinCondition>(&bc)) {
        if (!(r->gamma > 0.0) || !std::isfinite(r->gamma))
            throw std::invalid_argument("ProblemSpec: Robin gamma must be > 0");
    } else if (const auto* n = std::get_if<NeumannCondition>(&bc)) {
        if (!(n->gamma_star > 0.0) || !std::isfinite(n->gamma_star))
            throw std::invalid_argument("ProblemSpec: Neumann gamma* must be > 0");
        if (n->gamma_star > neumann_coefficient_limit(delta))
            throw std::invalid_argument(
                "ProblemSpec: Neumann gamma* exceeds 2/sqrt(pi(1+delta))");
    }
}

ProblemSpec robin_problem(double p, double delta, double gamma) {
    ProblemSpec s{p, delta, RobinCondition{gamma}};
    s.validate();
    return s;
}

ProblemSpec dirichlet_problem(double p, double delta) {
    ProblemSpec s{p, delta, DirichletCondition{}};
    s.validate();
    return s;
}

ProblemSpec neumann_problem(double p, double delta, double gamma_star) {
    ProblemSpec s{p, delta, NeumannCondition{gamma_star}};
    s.validate();
    return s;
}

}  // namespace merf
