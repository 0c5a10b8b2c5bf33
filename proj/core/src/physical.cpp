#include "merf/physical.hpp"

#include <cmath>

namespace merf {

namespace {

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) throw NonPositiveParameter(name);
}

}  // namespace

double thermal_diffusivity(const PhysicalParams& params) {
    require_positive(params.k0, "k0");
    require_positive(params.rho, "rho");
    require_positive(params.c, "c");
    return params.k0 / (params.rho * params.c);
}

double physical_to_gamma(const PhysicalParams& params, CoefficientKind kind) {
    const double alpha0 = thermal_diffusivity(params);
    if (kind == CoefficientKind::Robin) {
        require_positive(params.h_coef, "h_coef");
        require_positive(params.T0 - params.Tf, "T0 - Tf");
        return 2.0 * params.h_coef * std::sqrt(alpha0) / params.k0;
    }
    require_positive(params.q0, "q0");
    require_positive(params.Tf, "Tf");
    return 2.0 * params.q0 * std::sqrt(alpha0) / (params.k0 * params.Tf);
}

}  // namespace merf
