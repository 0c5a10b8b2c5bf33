#include "merf/kernel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "merf/constants.hpp"

namespace merf {

namespace {

double pow_p(double v, double p) {
    if (p == 1.0) return v;
    if (p == 2.0) return v * v;
    if (p == 3.0) return v * v * v;
    return std::pow(v, p);
}

void require_candidate(const GridFunction& h, const char* who) {
    if (!in_candidate_set(h))
        throw std::invalid_argument(std::string(who) + ": h is not in the candidate set");
}

}  // namespace

double psi(const GridFunction& h, const ProblemSpec& spec, std::size_t i) {
    return 1.0 + spec.delta * pow_p(h.values.at(i), spec.p);
}

std::vector<double> psi_values(const GridFunction& h, const ProblemSpec& spec) {
    std::vector<double> out(h.values.size());
    for (std::size_t i = 0; i < h.values.size(); ++i)
        out[i] = 1.0 + spec.delta * pow_p(h.values[i], spec.p);
    return out;
}

std::vector<double> inner_cumulative(const GridFunction& h, const ProblemSpec& spec) {
    const auto P = psi_values(h, spec);
    std::vector<double> I(h.grid.size(), 0.0);
    double prev = 0.0;  // x_0 / Psi(0) with x_0 = 0
    for (std::size_t i = 1; i < h.grid.size(); ++i) {
        const double cur = h.grid[i] / P[i];
        I[i] = I[i - 1] + 0.5 * (prev + cur) * (h.grid[i] - h.grid[i - 1]);
        prev = cur;
    }
    return I;
}

GridFunction kernel_f(const GridFunction& h, const ProblemSpec& spec) {
    require_candidate(h, "kernel_f");
    const auto P = psi_values(h, spec);
    const auto I = inner_cumulative(h, spec);
    GridFunction f;
    f.grid = h.grid;
    f.values.resize(h.grid.size());
    for (std::size_t i = 0; i < h.grid.size(); ++i)
        f.values[i] = std::exp(-2.0 * I[i]) / P[i];
    f.tail_value = 0.0;
    return f;
}

GridFunction integral_0_to_x(const GridFunction& f) {
    f.validate();
    GridFunction out;
    out.grid = f.grid;
    out.values.resize(f.grid.size());
    out.values[0] = 0.0;
    for (std::size_t i = 1; i < f.grid.size(); ++i)
        out.values[i] = out.values[i - 1] +
                        0.5 * (f.values[i] + f.values[i - 1]) * (f.grid[i] - f.grid[i - 1]);
    out.tail_value = out.values.back();
    return out;
}

KernelIntegrals kernel_integrals(const GridFunction& h, const ProblemSpec& spec) {
    require_candidate(h, "kernel_integrals");
    const auto P = psi_values(h, spec);
    const auto I = inner_cumulative(h, spec);
    const std::size_t n = h.grid.size();

    KernelIntegrals out;
    out.f.grid = h.grid;
    out.f.tail_value = 0.0;
    out.f.values.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        out.f.values[i] = std::exp(-2.0 * I[i]) / P[i];

    // Gauss-Legendre nodes/weights on [0, 1].
    const double off = std::sqrt(0.6) / 2.0;
    const double gt[3] = {0.5 - off, 0.5, 0.5 + off};
    const double gw[3] = {5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};

    out.increments.resize(n - 1);
    out.cumulative.assign(n, 0.0);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        const double dx = h.grid[j + 1] - h.grid[j];
        const double xj = h.grid[j];
        const double psibar = 0.5 * (P[j] + P[j + 1]);
        double s = 0.0;
        for (int k = 0; k < 3; ++k) {
            const double t = gt[k] * dx;
            s += gw[k] * std::exp(-(2.0 * xj * t + t * t) / psibar);
        }
        out.increments[j] = dx * std::exp(-2.0 * I[j]) / psibar * s;
        out.cumulative[j + 1] = out.cumulative[j] + out.increments[j];
    }

    const double a = 1.0 + spec.delta;
    const double xm = h.grid.back();
    // Exponent is <= 0 since the running inner integral dominates
    // x_max^2 / (2 (1+delta)) node-wise.
    out.tail = std::exp(-2.0 * I.back() + xm * xm / a) * std::sqrt(a) * (kSqrtPi / 2.0) *
               std::erfc(xm / std::sqrt(a)) / a;
    out.total = out.cumulative.back() + out.tail;
    return out;
}

double integral_0_to_inf(const GridFunction& h, const ProblemSpec& spec) {
    return kernel_integrals(h, spec).total;
}

}  // namespace merf
