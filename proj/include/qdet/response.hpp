#pragma once

#include "qdet/propagators.hpp"
#include "qdet/quadrature.hpp"

#include <complex>
#include <string>

namespace qdet {

enum class DetectorKind { UDD, GD, MD };

std::string to_string(DetectorKind k);

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;
};

// One fully specified experiment: a point source kicked at (y0, source_pos)
// driving a two-level detector at rest at detector_pos, read out over the
// sharp window [t_i, t_f].
struct Scenario {
    double mass = 1.0;
    double omega_eg = 1.0;   // detector gap, > 0
    double c1 = 1.0;         // source strength
    double m_eg_abs = 1.0;   // |<e|mu|g>| monopole matrix element
    double g = 1.0;          // detector-field coupling
    double source_time = 0.0;
    Vec3 source_pos{};
    Vec3 detector_pos{1.0, 0.0, 0.0};
    double t_i = 0.5;
    double t_f = 3.0;

    double r() const;        // |detector_pos - source_pos|, must be > 0
    void validate() const;
};

enum class SourceTiming { BeforeWindow, InsideWindow, AfterWindow };

struct LightconeGeometry {
    double r;
    double s_i2;     // (t_i - y0)^2 - r^2
    double s_f2;     // (t_f - y0)^2 - r^2
    SourceTiming timing;
    bool on_cone;    // a window edge sits exactly on the forward light cone
    static LightconeGeometry of(const Scenario& s);
};

struct ResponseBreakdown {
    DetectorKind detector = DetectorKind::UDD;
    double probability = 0.0;
    double vacuum_part = 0.0;                  // UDD only; 0 for GD/MD
    std::complex<double> amp_p2{0.0, 0.0};     // commutator-route amplitude
    std::complex<double> amp_p3{0.0, 0.0};     // symmetric-kernel amplitude
    double epsilon_uv = 0.0;                   // damping used for the vacuum term
    LightconeGeometry geometry{};
};

// Building-block integrals over the squared-interval variable u = s''^2,
// kernel phase phi(u) = e^{i w sqrt(u + r^2)} / (2 sqrt(u + r^2)):
//   f1: J1 branch plus the light-cone delta,  0 <= v2 <= u2
//   f2: time-like symmetric branch (Y1/pole), 0 <  v2 <= u2
//   f3: space-like symmetric branch (K1/pole), v2 <= u2 < 0
// f2/f3 refuse an endpoint exactly on the cone: the one-sided pole integral
// is log-divergent there and only the paired principal value across the
// cone (amplitude_p3) is finite.
std::complex<double> f1(double u2, double v2, const Scenario& s,
                        const QuadratureConfig& cfg);
std::complex<double> f2(double u2, double v2, const Scenario& s,
                        const QuadratureConfig& cfg);
std::complex<double> f3(double u2, double v2, const Scenario& s,
                        const QuadratureConfig& cfg);

// Commutator-route amplitude
//   P2 = c1 m_eg int_{t0}^{t_f} e^{i w t''} Delta(r, t'' - y0) dt''
// with t0 = max(t_i, y0); exactly zero when the window ends before the
// forward cone arrives (s_f2 < 0).
std::complex<double> amplitude_p2(const Scenario& s, const QuadratureConfig& cfg);

// Symmetric-kernel amplitude (the extra piece a Glauber detector sees),
// nonzero for fully space-like windows.  For windows crossing the cone the
// Y1 and K1 branches are paired through a principal value.
std::complex<double> amplitude_p3(const Scenario& s, const QuadratureConfig& cfg);

// Source-free excitation probability of a sharply switched UDD detector
// (vacuum term), reduced to a single damped k-integral.  Requires
// cfg.uv_damping > 0.
double vacuum_p1(const Scenario& s, const QuadratureConfig& cfg);

// Full readout:
//   UDD: P1 + g^2 |P2|^2
//   GD:  g^2 |P2/2 + P3|^2
//   MD:  Theta(s_f^2) g^2 |P2/2 + P3_clipped|^2, where P3_clipped keeps the
//        time-like branch and the cone-boundary pole but drops the regular
//        space-like kernel; exactly zero beyond the forward cone.
ResponseBreakdown detect(const Scenario& s, DetectorKind kind,
                         const QuadratureConfig& cfg);

// Independent cross-checks that never touch the Bessel-reduction path:
// time-domain Simpson grids over closed-form massless propagators plus
// momentum-space massive corrections (with Richardson extrapolation in the
// damping).  Return the source-dependent probability only.
double oracle_udd(const Scenario& s, int grid_n, const QuadratureConfig& cfg);
double oracle_gd(const Scenario& s, int grid_n, const QuadratureConfig& cfg);

} // namespace qdet
