#include "merf/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "merf/constants.hpp"

namespace merf {

void GridFunction::validate() const {
    if (grid.size() != values.size())
        throw std::invalid_argument("GridFunction: grid and values lengths differ");
    if (grid.size() < 3)
        throw std::invalid_argument("GridFunction: need at least 3 nodes (2 panels)");
    if (grid.front() != 0.0)
        throw std::invalid_argument("GridFunction: grid must start at x = 0");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!std::isfinite(grid[i]) || !std::isfinite(values[i]))
            throw std::invalid_argument("GridFunction: non-finite entry");
        if (i > 0 && grid[i] <= grid[i - 1])
            throw std::invalid_argument("GridFunction: grid must be strictly increasing");
    }
    if (!std::isfinite(tail_value))
        throw std::invalid_argument("GridFunction: non-finite tail value");
}

namespace {

bool structurally_ok(const GridFunction& h) noexcept {
    if (h.grid.size() != h.values.size() || h.grid.size() < 3) return false;
    if (h.grid.front() != 0.0) return false;
    for (std::size_t i = 0; i < h.grid.size(); ++i) {
        if (!std::isfinite(h.grid[i]) || !std::isfinite(h.values[i])) return false;
        if (i > 0 && h.grid[i] <= h.grid[i - 1]) return false;
    }
    return true;
}

}  // namespace

bool in_candidate_set(const GridFunction& h) noexcept {
    if (!structurally_ok(h) || h.tail_value != 1.0) return false;
    for (double v : h.values)
        if (v < 0.0 || v > 1.0) return false;
    return true;
}

bool in_candidate_set_star(const GridFunction& h) noexcept {
    return in_candidate_set(h) && h.values.front() == 0.0;
}

double sup_distance(const GridFunction& a, const GridFunction& b) {
    if (a.size() != b.size() || a.grid.back() != b.grid.back())
        throw std::invalid_argument("sup_distance: functions live on different grids");
    double d = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        d = std::max(d, std::abs(a.values[i] - b.values[i]));
    return d;
}

void QuadratureConfig::validate(double delta) const {
    if (n_points < 3)
        throw std::invalid_argument("QuadratureConfig: need at least 3 nodes");
    if (!(x_max > 0.0) || !std::isfinite(x_max))
        throw std::invalid_argument("QuadratureConfig: x_max must be positive");
    if (!(tail_tol > 0.0))
        throw std::invalid_argument("QuadratureConfig: tail_tol must be positive");
    const double s = std::sqrt(1.0 + delta);
    const double neglected = s * (kSqrtPi / 2.0) * std::erfc(x_max / s);
    if (neglected > 10.0 * tail_tol)
        throw std::invalid_argument(
            "QuadratureConfig: x_max = " + std::to_string(x_max) +
            " leaves a tail above 10*tail_tol; increase x_max (roughly >= 5.3*sqrt(1+delta))");
}

QuadratureConfig default_quadrature(double delta) {
    QuadratureConfig cfg;
    cfg.x_max = 6.0 * std::sqrt(1.0 + delta);
    return cfg;
}

std::vector<double> make_uniform_grid(const QuadratureConfig& cfg) {
    std::vector<double> g(cfg.n_points);
    const auto n = static_cast<double>(cfg.n_points - 1);
    for (std::size_t i = 0; i < cfg.n_points; ++i)
        g[i] = cfg.x_max * (static_cast<double>(i) / n);
    g.front() = 0.0;
    g.back() = cfg.x_max;
    return g;
}

}  // namespace merf
