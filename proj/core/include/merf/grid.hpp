#pragma once

#include <cstddef>
#include <vector>

namespace merf {

// A real-valued function sampled on a finite grid 0 = x_0 < ... < x_N,
// together with the constant value it is assumed to take beyond x_N.
// Candidate solutions live in the set K (values in [0,1], limit 1 at
// infinity); kernels and cumulative integrals reuse the same container
// without the K restrictions.
struct GridFunction {
    std::vector<double> grid;
    std::vector<double> values;
    double tail_value = 1.0;

    std::size_t size() const noexcept { return grid.size(); }
    double x_max() const { return grid.back(); }

    // Structural invariants: matching lengths, at least 3 nodes, grid
    // starting at 0 and strictly increasing, everything finite.
    // Throws std::invalid_argument.
    void validate() const;
};

// Membership in K: structurally valid, 0 <= values <= 1, tail_value == 1.
bool in_candidate_set(const GridFunction& h) noexcept;

// Membership in K*: additionally h(0) == 0.
bool in_candidate_set_star(const GridFunction& h) noexcept;

// Discrete sup-norm distance of two functions sampled on the same grid.
double sup_distance(const GridFunction& a, const GridFunction& b);

struct QuadratureConfig {
    std::size_t n_points = 2001;  // grid nodes, i.e. panels + 1
    double x_max = 6.0;
    double tail_tol = 1e-14;

    // Requires the neglected tail sqrt(1+delta) (sqrt(pi)/2)
    // erfc(x_max/sqrt(1+delta)) to stay below 10 * tail_tol, so the
    // analytic tail closure dominates the truncation error.
    void validate(double delta) const;
};

// n_points = 2001 on [0, 6 sqrt(1+delta)].
QuadratureConfig default_quadrature(double delta);

std::vector<double> make_uniform_grid(const QuadratureConfig& cfg);

// Samples f on the nodes of cfg's uniform grid.
template <typename F>
GridFunction sample(F&& f, const QuadratureConfig& cfg, double tail_value = 1.0) {
    GridFunction out;
    out.grid = make_uniform_grid(cfg);
    out.values.reserve(out.grid.size());
    for (double x : out.grid) out.values.push_back(f(x));
    out.tail_value = tail_value;
    return out;
}

}  // namespace merf
