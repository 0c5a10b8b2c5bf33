#include "merf/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace merf {

namespace {

double pow_p(double v, double p) {
    if (p == 1.0) return v;
    if (p == 2.0) return v * v;
    if (p == 3.0) return v * v * v;
    return std::pow(v, p);
}

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

}  // namespace

OperatorOutput apply_robin(const GridFunction& h, const ProblemSpec& spec) {
    spec.validate();
    const auto* rc = std::get_if<RobinCondition>(&spec.bc);
    if (!rc) throw std::invalid_argument("apply_robin: spec does not carry a Robin condition");
    const double gamma = rc->gamma;

    auto ki = kernel_integrals(h, spec);
    const double denom = 1.0 + gamma * ki.total;  // > 1

    OperatorOutput out;
    out.image.grid = h.grid;
    out.image.tail_value = 1.0;
    out.image.values.resize(h.grid.size());
    out.increments.resize(ki.increments.size());
    for (std::size_t i = 0; i < h.grid.size(); ++i)
        out.image.values[i] = clamp01((1.0 + gamma * ki.cumulative[i]) / denom);
    for (std::size_t j = 0; j < ki.increments.size(); ++j)
        out.increments[j] = gamma * ki.increments[j] / denom;
    out.y0 = 1.0 / denom;
    out.c0 = gamma * out.y0;
    out.yprime0 = out.c0 * ki.f.values.front();
    return out;
}

OperatorOutput apply_dirichlet(const GridFunction& h, const ProblemSpec& spec) {
    spec.validate();
    if (!spec.is_dirichlet())
        throw std::invalid_argument("apply_dirichlet: spec does not carry a Dirichlet condition");

    const GridFunction* input = &h;
    GridFunction projected;
    if (!h.values.empty() && h.values.front() != 0.0) {
        projected = h;
        projected.values.front() = 0.0;
        input = &projected;
    }

    auto ki = kernel_integrals(*input, spec);
    OperatorOutput out;
    out.image.grid = h.grid;
    out.image.tail_value = 1.0;
    out.image.values.resize(h.grid.size());
    out.increments.resize(ki.increments.size());
    out.image.values[0] = 0.0;
    for (std::size_t i = 1; i < h.grid.size(); ++i)
        out.image.values[i] = clamp01(ki.cumulative[i] / ki.total);
    for (std::size_t j = 0; j < ki.increments.size(); ++j)
        out.increments[j] = ki.increments[j] / ki.total;
    out.y0 = 0.0;
    out.c0 = 1.0 / ki.total;
    out.yprime0 = out.c0 * ki.f.values.front();
    return out;
}

OperatorOutput apply_neumann(const GridFunction& h, const ProblemSpec& spec) {
    spec.validate();
    const auto* nc = std::get_if<NeumannCondition>(&spec.bc);
    if (!nc) throw std::invalid_argument("apply_neumann: spec does not carry a Neumann condition");
    const double gs = nc->gamma_star;

    auto ki = kernel_integrals(h, spec);
    const std::size_t n = h.grid.size();

    // Suffix sums keep int_x^inf f_h exact and non-negative; subtracting
    // near-equal running totals would not.
    std::vector<double> remaining(n, 0.0);
    remaining[n - 1] = ki.tail;
    for (std::size_t i = n - 1; i-- > 0;) remaining[i] = remaining[i + 1] + ki.increments[i];

    OperatorOutput out;
    out.image.grid = h.grid;
    out.image.tail_value = 1.0;
    out.image.values.resize(n);
    out.increments.resize(n - 1);
    for (std::size_t i = 0; i < n; ++i) out.image.values[i] = clamp01(1.0 - gs * remaining[i]);
    for (std::size_t j = 0; j + 1 < n; ++j) out.increments[j] = gs * ki.increments[j];
    out.y0 = clamp01(1.0 - gs * remaining[0]);
    out.c0 = gs;
    out.yprime0 = gs * ki.f.values.front();
    return out;
}

OperatorOutput apply_operator(const GridFunction& h, const ProblemSpec& spec) {
    if (spec.is_robin()) return apply_robin(h, spec);
    if (spec.is_dirichlet()) return apply_dirichlet(h, spec);
    return apply_neumann(h, spec);
}

GridFunction analytic_derivative(const OperatorOutput& out, const GridFunction& h,
                                 const ProblemSpec& spec) {
    GridFunction d = kernel_f(h, spec);
    for (double& v : d.values) v *= out.c0;
    d.tail_value = 0.0;
    return d;
}

double boundary_residual(double y0, double yprime0, const ProblemSpec& spec) {
    const double psi0 = 1.0 + spec.delta * pow_p(y0, spec.p);
    if (const auto* r = std::get_if<RobinCondition>(&spec.bc))
        return std::abs(psi0 * yprime0 - r->gamma * y0);
    if (std::holds_alternative<DirichletCondition>(spec.bc)) return std::abs(y0);
    return std::abs(psi0 * yprime0 - std::get<NeumannCondition>(spec.bc).gamma_star);
}

double boundary_residual_tolerance(const ProblemSpec& spec) {
    double coef = 0.0;
    if (const auto* r = std::get_if<RobinCondition>(&spec.bc)) coef = r->gamma;
    if (const auto* n = std::get_if<NeumannCondition>(&spec.bc)) coef = n->gamma_star;
    return 1e-8 * (1.0 + coef);
}

std::vector<double> ode_residual(const GridFunction& y, const GridFunction& yprime,
                                 const ProblemSpec& spec) {
    y.validate();
    if (y.size() != yprime.size())
        throw std::invalid_argument("ode_residual: y and y' live on different grids");
    const auto P = psi_values(y, spec);
    std::vector<double> r(y.size() - 2);
    for (std::size_t i = 1; i + 1 < y.size(); ++i) {
        const double w = y.grid[i + 1] - y.grid[i - 1];
        const double dP = (P[i + 1] - P[i - 1]) / w;
        const double ypp = (yprime.values[i + 1] - yprime.values[i - 1]) / w;
        r[i - 1] = std::abs(dP * yprime.values[i] + P[i] * ypp +
                            2.0 * y.grid[i] * yprime.values[i]);
    }
    return r;
}

double ode_residual_tolerance(double dx) { return 2.0 * dx * dx; }

}  // namespace merf
