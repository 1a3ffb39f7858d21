#pragma once

#include "qdet/response.hpp"

#include <vector>

namespace qdet {

enum class LocalizationObservable { GlauberDensity, NewtonWignerDensity };

std::string to_string(LocalizationObservable o);

// <rho_G(r,t)> = g^2 |Delta_+(r, t - y0)|^2 on the exact point-source state;
// exactly 0 for t <= y0.  Closed-form branches away from the cone, damped
// momentum oracle in a band around it.
double glauber_density(double r, double t, const Scenario& scen,
                       const QuadratureConfig& cfg);

// <rho_NW(r,t)> = g^2 |(R Delta_+)(r, t - y0)|^2, with R acting in momentum
// space as sqrt(2) w^{1/2}:
//   (R Delta_+)(r,t) = 1/(4 pi^2 r) int_0^kmax dk k sin(kr) sqrt(2/w)
//                      e^{-i w t} e^{-eps w}
// cfg.uv_damping > 0 is mandatory (conditionally convergent integral).
double newton_wigner_density(double r, double t, const Scenario& scen,
                             const QuadratureConfig& cfg);

struct DensityProfile {
    LocalizationObservable observable;
    double t;
    double r_lc;         // light-cone radius t - y0
    double epsilon_uv;
    std::vector<std::pair<double, double>> points;  // (r, value)
};

// r_grid must be strictly increasing and positive.
DensityProfile density_profile(LocalizationObservable obs, double t,
                               const std::vector<double>& r_grid,
                               const Scenario& scen, const QuadratureConfig& cfg);

} // namespace qdet
