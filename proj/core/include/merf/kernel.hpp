#pragma once

#include "merf/grid.hpp"
#include "merf/problem.hpp"

namespace merf {

// Conductivity factor Psi_h = 1 + delta h^p at node i. Lies in [1, 1+delta]
// for candidates.
double psi(const GridFunction& h, const ProblemSpec& spec, std::size_t i);

std::vector<double> psi_values(const GridFunction& h, const ProblemSpec& spec);

// Running trapezoid integral of xi / Psi_h(xi) over the grid; zero at the
// first node. Exact when Psi_h is constant, O(dx^2) otherwise, and bounded
// node-wise between x^2/(2(1+delta)) and x^2/2.
std::vector<double> inner_cumulative(const GridFunction& h, const ProblemSpec& spec);

// The positive kernel f_h = exp(-2 int_0^x xi/Psi_h dxi) / Psi_h sampled on
// h's grid. Satisfies exp(-x^2)/(1+delta) <= f_h(x) <= exp(-x^2/(1+delta))
// node-wise. Requires h in the candidate set. tail_value is 0.
GridFunction kernel_f(const GridFunction& h, const ProblemSpec& spec);

// Running trapezoid integral of an arbitrary sampled function; zero at the
// first node, tail_value set to the final value.
GridFunction integral_0_to_x(const GridFunction& f);

// Kernel values plus its running and total integral in one pass.
//
// Panel integrals of f_h use a 3-point Gauss-Legendre rule applied to the
// local model exp(-2 I_j - (2 x_j t + t^2)/Psi_bar) / Psi_bar, where Psi_bar
// is the panel average of Psi_h. The model is the exact kernel whenever
// Psi_h is constant (in particular for delta = 0); for varying Psi_h the
// committed error is O(dx^2) with a smooth coefficient. Beyond x_max the
// candidate is frozen at 1 and the remaining integral closes analytically
// with an erfc term.
struct KernelIntegrals {
    GridFunction f;
    std::vector<double> increments;  // integral of f over each panel, > 0
    std::vector<double> cumulative;  // running integral at the nodes
    double tail = 0.0;               // analytic closure beyond x_max
    double total = 0.0;              // cumulative.back() + tail
};

KernelIntegrals kernel_integrals(const GridFunction& h, const ProblemSpec& spec);

// int_0^inf f_h, i.e. kernel_integrals(...).total. Lies in
// [sqrt(pi)/(2(1+delta)), sqrt(1+delta) sqrt(pi)/2] for candidates.
double integral_0_to_inf(const GridFunction& h, const ProblemSpec& spec);

}  // namespace merf
