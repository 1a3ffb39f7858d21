#pragma once

#include <complex>
#include <functional>

namespace qdet {

// Numeric control knobs shared by every integral in the project.
struct QuadratureConfig {
    double abs_tol = 1e-12;
    double rel_tol = 1e-8;
    int max_panels = 4000;
    double pv_excision = 1e-8;   // half-width of the light-cone excision, in s^2 units
    double uv_damping = 0.05;    // e^{-eps*omega} regulator for momentum integrals
    double k_max = 1000.0;       // momentum cutoff for oracle integrals

    void validate() const;
};

struct IntegralResult {
    std::complex<double> value{0.0, 0.0};
    double error_estimate = 0.0;
    int panels_used = 0;
};

using Integrand = std::function<std::complex<double>(double)>;

// Adaptive Gauss-Kronrod 7/15 with worst-panel bisection.  When the caller
// declares a dominant oscillation frequency (radians per unit abscissa) the
// initial panel width is capped so no panel spans more than ~pi/2 of phase.
IntegralResult integrate_adaptive(const Integrand& f, double a, double b,
                                  const QuadratureConfig& cfg,
                                  double dominant_freq = 0.0);

// Integral of f_smooth(u)/sqrt(u) on [a, b], 0 <= a < b, via u = w^2.
IntegralResult integrate_sqrt_endpoint(const Integrand& f_smooth, double a,
                                       double b, const QuadratureConfig& cfg,
                                       double dominant_freq = 0.0);

// Principal value of f_reg(u) + strength/u across u = 0, a < 0 < b.
// The pole is integrated exactly (strength * ln(b/|a|)); f_reg is handled by
// the sqrt-endpoint engine on [a, -d] and [d, b] with d = cfg.pv_excision,
// and the result must survive halving d (Richardson stability check).
IntegralResult integrate_principal_value(const Integrand& f_reg, double a,
                                         double b, std::complex<double> strength,
                                         const QuadratureConfig& cfg,
                                         double dominant_freq = 0.0);

} // namespace qdet
