#pragma once

#include "qdet/quadrature.hpp"

#include <complex>

namespace qdet {

struct Mass {
    double m;
    explicit Mass(double value);
};

// Spatial separation r > 0 and time separation t (source event at the
// origin of the interval).
struct IntervalPoint {
    double r;
    double t;
    double s2() const { return t * t - r * r; }
};

// Smooth (non-distributional) part of the commutator function for t > 0:
//   Delta(r,t) = -delta(s^2)/(2pi) + Theta(s^2) m J1(m sqrt(s^2)) / (4pi sqrt(s^2))
// This returns the Theta(s^2) piece only; the light-cone delta is handled
// analytically by callers.  Theta(0) = 1, with the J1 limit m^2/(8pi).
double pauli_jordan_smooth(double s2, Mass m);

// Symmetric (anticommutator) part of the Wightman function, split as
//   K(s^2) = regular(s^2) + pole_strength / s^2,   pole_strength = -1/(4pi^2)
// with regular built from the cancellation-free Y1/K1 remainders:
//   s^2 > 0:  m Y1_reg(m sqrt(s^2)) / (8pi sqrt(s^2))
//   s^2 < 0:  m K1_reg(m rho) / (4pi^2 rho),  rho = sqrt(-s^2)
//   m = 0:    regular = 0 identically.
// The full Wightman function is then Delta_+ = K + (i/2) Delta.
struct KernelSplit {
    double regular;
    double pole_strength;
};
KernelSplit hadamard_kernel(double s2, Mass m);

// Convenience: full smooth Wightman function away from the light cone
// (no delta / principal-value content), valid for s2 != 0.
std::complex<double> wightman_closed(IntervalPoint p, Mass m);

// Momentum-space oracle for the Wightman function,
//   Delta_+(r,t) = 1/(4 pi^2 r) int_0^kmax dk k sin(kr) e^{-i w t} e^{-eps w} / w
// with w = sqrt(k^2 + m^2), eps = cfg.uv_damping (> 0 required), cutoff
// cfg.k_max.  Convention anchor for every closed form in the project.
std::complex<double> wightman_momentum_oracle(IntervalPoint p, Mass m,
                                              const QuadratureConfig& cfg);

// Massless Wightman function with the e^{-eps k} damping kept exact:
//   -1 / (4 pi^2 (t^2 - r^2 - 2 i eps t - eps^2))
std::complex<double> wightman_massless(IntervalPoint p, double eps);

// Mass-dependent remainder of the Wightman function,
//   Delta_+ - Delta_+(m=0), as a single absolutely convergent k-integral
// (integrand decays like 1/k^2, smooth across the light cone).  Used by the
// response oracles; eps damping from cfg.uv_damping.
std::complex<double> wightman_massive_correction(IntervalPoint p, Mass m,
                                                 const QuadratureConfig& cfg);

// Equal-position vacuum Wightman function W(tau) = Delta_+(r->0, tau) with
// UV damping, as a damped k-integral.  Requires cfg.uv_damping > 0.
std::complex<double> vacuum_wightman_equal_point(double tau, Mass m,
                                                 const QuadratureConfig& cfg);

// Frequency-split step function:
//   Theta_pm(tau) = -1/(2 pi i) int dw e^{-i w tau} / (w + i eps)
// over [0, Omega] (plus) and [-Omega, 0] (minus).  Theta_+ + Theta_- ->
// Theta(tau) as eps -> 0, Omega -> inf; each piece alone is nonzero for
// tau < 0 (the space-like tail mechanism in miniature).
struct ThetaSplit {
    std::complex<double> plus;
    std::complex<double> minus;
};
ThetaSplit theta_frequency_split(double tau, double eps, double omega_cap,
                                 const QuadratureConfig& cfg);

} // namespace qdet
