#pragma once

#include <stdexcept>
#include <string>

namespace merf {

class NonPositiveParameter : public std::invalid_argument {
  public:
    explicit NonPositiveParameter(const std::string& name)
        : std::invalid_argument("physical parameter '" + name + "' must be positive") {}
};

// Material and boundary data of the underlying half-space conduction
// problem; the dimensionless boundary coefficients derive from these.
struct PhysicalParams {
    double k0 = 1.0;      // reference conductivity, W/(m K)
    double rho = 1.0;     // density, kg/m^3
    double c = 1.0;       // specific heat, J/(kg K)
    double h_coef = 0.0;  // heat transfer coefficient, W s^{1/2}/(m^2 K)
    double q0 = 0.0;      // flux coefficient, W s^{1/2}/m^2
    double Tf = 0.0;      // phase-change temperature, K
    double T0 = 0.0;      // bulk temperature, K
};

// alpha0 = k0 / (rho c).
double thermal_diffusivity(const PhysicalParams& params);

enum class CoefficientKind { Robin, Neumann };

// Robin:   gamma  = 2 h sqrt(alpha0) / k0        (twice the Biot number)
// Neumann: gamma* = 2 q0 sqrt(alpha0) / (k0 Tf)
// Robin additionally requires T0 > Tf (melting setup).
double physical_to_gamma(const PhysicalParams& params, CoefficientKind kind);

}  // namespace merf
