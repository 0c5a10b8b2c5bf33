#pragma once

#include "merf/kernel.hpp"

namespace merf {

// Image of one integral-operator application, plus the boundary data that
// comes with it. The image is again a candidate: values in [0,1],
// non-decreasing, tending to 1.
struct OperatorOutput {
    GridFunction image;
    double y0 = 0.0;       // image value at x = 0
    double c0 = 0.0;       // derivative scale: (T h)' = c0 f_h
    double yprime0 = 0.0;  // c0 f_h(0) = c0 / Psi_h(0)
    // Node-to-node increments of the image, kept in product form so sign
    // and monotonicity checks do not lose them to cancellation.
    std::vector<double> increments;
};

// T(h) = (1 + gamma int_0^x f_h) / (1 + gamma int_0^inf f_h).
OperatorOutput apply_robin(const GridFunction& h, const ProblemSpec& spec);

// T(h) = int_0^x f_h / int_0^inf f_h. An input with h(0) != 0 is projected
// by resetting the first node to 0.
OperatorOutput apply_dirichlet(const GridFunction& h, const ProblemSpec& spec);

// T(h) = 1 - gamma* int_x^inf f_h, with gamma* <= 2/sqrt(pi(1+delta)).
OperatorOutput apply_neumann(const GridFunction& h, const ProblemSpec& spec);

OperatorOutput apply_operator(const GridFunction& h, const ProblemSpec& spec);

// y' = c0 f_h; strictly positive everywhere.
GridFunction analytic_derivative(const OperatorOutput& out, const GridFunction& h,
                                 const ProblemSpec& spec);

// Residual of the boundary condition at x = 0 given y(0) and y'(0):
// Robin    |(1 + delta y0^p) y'0 - gamma y0|
// Dirichlet |y0|
// Neumann  |(1 + delta y0^p) y'0 - gamma*|
double boundary_residual(double y0, double yprime0, const ProblemSpec& spec);

// 1e-8 (1 + coefficient); the residuals at a discrete fixed point are
// quadrature-limited, not method-limited.
double boundary_residual_tolerance(const ProblemSpec& spec);

// |(Psi_y y')' + 2 x y'| at the interior nodes, with Psi_y' and y'' from
// centered differences of Psi_y and y'.
std::vector<double> ode_residual(const GridFunction& y, const GridFunction& yprime,
                                 const ProblemSpec& spec);

// C_ode dx^2 bound on the centered-difference residual. C_ode = 2 is about
// 2.5x the constant measured on the delta = 0 solutions, where the
// continuous residual vanishes identically.
double ode_residual_tolerance(double dx);

}  // namespace merf
