#include "qdet/response.hpp"
#include "qdet/bessel.hpp"
#include "qdet/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qdet {

namespace {

constexpr double kPi = std::numbers::pi;
using cplx = std::complex<double>;
const cplx kI{0.0, 1.0};

// Phase/Jacobian factor of the u = s''^2 substitution:
//   e^{i w t''} dt'' = e^{i w y0} phi(u) du,  phi(u) = e^{i w R}/(2R),
//   R = sqrt(u + r^2).
struct UKernelFrame {
    double r;
    double omega;
    cplx phi(double u) const {
        const double R = std::sqrt(u + r * r);
        return std::exp(cplx(0.0, omega * R)) / (2.0 * R);
    }
    double freq_u() const { return omega / (2.0 * r); }  // d(wR)/du at u=0
};

// int_lo^hi phi(u) m J1(m sqrt(u)) / (8 pi sqrt(u)) du,  0 <= lo < hi
cplx ij_integral(const UKernelFrame& fr, double lo, double hi, double m,
                 const QuadratureConfig& cfg) {
    if (m == 0.0 || !(lo < hi)) return 0.0;
    const auto f_smooth = [&](double u) -> cplx {
        return fr.phi(u) * (m * bessel::j1(m * std::sqrt(u)) / (8.0 * kPi));
    };
    return integrate_sqrt_endpoint(f_smooth, lo, hi, cfg, fr.freq_u() + 0.5 * m)
        .value;
}

// int_a^b phi(u) K(u) du with the full symmetric kernel, 0 not inside [a,b]
cplx kernel_integral(const UKernelFrame& fr, double a, double b, Mass m,
                     const QuadratureConfig& cfg) {
    if (!(a < b)) return 0.0;
    const auto f = [&](double u) -> cplx {
        const KernelSplit k = hadamard_kernel(u, m);
        return fr.phi(u) * (k.regular + k.pole_strength / u);
    };
    return integrate_adaptive(f, a, b, cfg, fr.freq_u() + 0.5 * m.m).value;
}

// Principal value of int_a^b phi(u) K(u) du across the cone, a < 0 < b.
// keep_spacelike_regular = false drops the regular K1 branch on u < 0
// (Milonni clipping) while keeping the two-sided cone pole.
cplx kernel_pv(const UKernelFrame& fr, double a, double b, Mass m,
               bool keep_spacelike_regular, const QuadratureConfig& cfg) {
    const cplx phi0 = fr.phi(0.0);
    const double pole = hadamard_kernel(-1.0, Mass(0.0)).pole_strength;
    const auto f_reg = [&](double u) -> cplx {
        const KernelSplit k = hadamard_kernel(u, m);
        cplx v = (fr.phi(u) - phi0) * (k.pole_strength / u);
        if (u > 0.0 || keep_spacelike_regular) v += fr.phi(u) * k.regular;
        return v;
    };
    return integrate_principal_value(f_reg, a, b, phi0 * pole, cfg,
                                     fr.freq_u() + 0.5 * m.m)
        .value;
}

struct Window {
    double t0;      // max(t_i, y0): start of the source-visible window
    double a;       // (t0 - y0)^2 - r^2
    double b;       // s_f^2
    bool empty;
};

Window source_window(const Scenario& s, const LightconeGeometry& g) {
    Window w{};
    w.t0 = std::max(s.t_i, s.source_time);
    const double dt = w.t0 - s.source_time;
    w.a = dt * dt - g.r * g.r;
    w.b = g.s_f2;
    w.empty = (g.timing == SourceTiming::AfterWindow) || !(w.t0 < s.t_f);
    return w;
}

cplx amplitude_p3_impl(const Scenario& s, const QuadratureConfig& cfg,
                       bool milonni_clip) {
    s.validate();
    const LightconeGeometry g = LightconeGeometry::of(s);
    const Window w = source_window(s, g);
    if (milonni_clip && w.b < 0.0) return 0.0;
    if (w.empty || !(w.a < w.b)) return 0.0;
    const UKernelFrame fr{g.r, s.omega_eg};
    const cplx pref =
        -kI * s.c1 * s.m_eg_abs * std::exp(cplx(0.0, s.omega_eg * s.source_time));
    if (w.b == 0.0) {
        // window closes exactly on the cone
        if (milonni_clip) return 0.0;  // clipped branch has empty support
        throw DomainError(
            "amplitude_p3: window edge on the light cone, one-sided pole integral diverges");
    }
    if (w.a == 0.0)
        throw DomainError(
            "amplitude_p3: window edge on the light cone, one-sided pole integral diverges");
    if (w.a > 0.0 || w.b < 0.0)
        return pref * kernel_integral(fr, w.a, w.b, Mass(s.mass), cfg);
    return pref * kernel_pv(fr, w.a, w.b, Mass(s.mass), !milonni_clip, cfg);
}

// Composite Simpson over [lo, hi] with n (even) intervals.
template <typename F>
cplx simpson(F&& f, double lo, double hi, int n) {
    if (!(lo < hi)) return 0.0;
    if (n < 2) n = 2;
    if (n % 2) ++n;
    const double h = (hi - lo) / n;
    cplx acc = f(lo) + f(hi);
    for (int i = 1; i < n; ++i)
        acc += f(lo + i * h) * ((i % 2) ? 4.0 : 2.0);
    return acc * (h / 3.0);
}

} // namespace

std::string to_string(DetectorKind k) {
    switch (k) {
        case DetectorKind::UDD: return "udd";
        case DetectorKind::GD: return "gd";
        case DetectorKind::MD: return "md";
    }
    return "?";
}

double Scenario::r() const {
    const double dx = detector_pos.x - source_pos.x;
    const double dy = detector_pos.y - source_pos.y;
    const double dz = detector_pos.z - source_pos.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

void Scenario::validate() const {
    const double vals[] = {mass, omega_eg, c1, m_eg_abs, g, source_time,
                           source_pos.x, source_pos.y, source_pos.z,
                           detector_pos.x, detector_pos.y, detector_pos.z,
                           t_i, t_f};
    for (double v : vals)
        if (!std::isfinite(v)) throw DomainError("Scenario: non-finite parameter");
    if (mass < 0.0) throw DomainError("Scenario: mass must be >= 0");
    if (!(omega_eg > 0.0)) throw DomainError("Scenario: omega_eg must be > 0");
    if (m_eg_abs < 0.0) throw DomainError("Scenario: m_eg_abs must be >= 0");
    if (!(t_i < t_f)) throw DomainError("Scenario: need t_i < t_f");
    if (!(r() > 0.0))
        throw DomainError("Scenario: detector must not sit on the source");
}

LightconeGeometry LightconeGeometry::of(const Scenario& s) {
    LightconeGeometry g{};
    g.r = s.r();
    const double di = s.t_i - s.source_time;
    const double df = s.t_f - s.source_time;
    g.s_i2 = di * di - g.r * g.r;
    g.s_f2 = df * df - g.r * g.r;
    if (s.source_time <= s.t_i)
        g.timing = SourceTiming::BeforeWindow;
    else if (s.source_time > s.t_f)
        g.timing = SourceTiming::AfterWindow;
    else
        g.timing = SourceTiming::InsideWindow;
    g.on_cone = (g.s_f2 == 0.0) ||
                (g.timing == SourceTiming::BeforeWindow && g.s_i2 == 0.0);
    return g;
}

std::complex<double> f1(double u2, double v2, const Scenario& s,
                        const QuadratureConfig& cfg) {
    s.validate();
    if (!(v2 >= 0.0) || !(v2 <= u2))
        throw DomainError("f1: need 0 <= v2 <= u2");
    const double r = s.r();
    const UKernelFrame fr{r, s.omega_eg};
    const cplx delta_term =
        -std::exp(cplx(0.0, s.omega_eg * r)) / (8.0 * kPi * r);
    return 2.0 * std::exp(cplx(0.0, s.omega_eg * s.source_time)) *
           (delta_term + ij_integral(fr, v2, u2, s.mass, cfg));
}

std::complex<double> f2(double u2, double v2, const Scenario& s,
                        const QuadratureConfig& cfg) {
    s.validate();
    if (!(v2 >= 0.0) || !(v2 <= u2))
        throw DomainError("f2: need 0 <= v2 <= u2");
    if (v2 == 0.0)
        throw DomainError(
            "f2: lower limit on the light cone diverges; use the paired principal value (amplitude_p3)");
    const UKernelFrame fr{s.r(), s.omega_eg};
    return std::exp(cplx(0.0, s.omega_eg * s.source_time)) *
           kernel_integral(fr, v2, u2, Mass(s.mass), cfg);
}

std::complex<double> f3(double u2, double v2, const Scenario& s,
                        const QuadratureConfig& cfg) {
    s.validate();
    if (!(u2 <= 0.0) || !(v2 <= u2))
        throw DomainError("f3: need v2 <= u2 <= 0");
    const double r = s.r();
    if (v2 < u2 && !(v2 >= -r * r))
        throw DomainError("f3: v2 below -r^2 is unreachable (s''^2 >= -r^2)");
    if (u2 == 0.0)
        throw DomainError(
            "f3: upper limit on the light cone diverges; use the paired principal value (amplitude_p3)");
    const UKernelFrame fr{s.r(), s.omega_eg};
    return std::exp(cplx(0.0, s.omega_eg * s.source_time)) *
           kernel_integral(fr, v2, u2, Mass(s.mass), cfg);
}

std::complex<double> amplitude_p2(const Scenario& s, const QuadratureConfig& cfg) {
    s.validate();
    const LightconeGeometry g = LightconeGeometry::of(s);
    if (g.s_f2 < 0.0) return 0.0;  // forward cone arrives after the window: exact zero
    const Window w = source_window(s, g);
    if (w.empty) return 0.0;
    const UKernelFrame fr{g.r, s.omega_eg};
    const cplx ph_y0 = std::exp(cplx(0.0, s.omega_eg * s.source_time));
    cplx acc{0.0, 0.0};
    if (w.a <= 0.0) {
        // cone crossing t'' = y0 + r lies inside [t0, t_f]  (Theta(0) = 1)
        acc += -std::exp(cplx(0.0, s.omega_eg * (s.source_time + g.r))) /
               (4.0 * kPi * g.r);
    }
    acc += 2.0 * ph_y0 * ij_integral(fr, std::max(w.a, 0.0), w.b, s.mass, cfg);
    return s.c1 * s.m_eg_abs * acc;
}

std::complex<double> amplitude_p3(const Scenario& s, const QuadratureConfig& cfg) {
    return amplitude_p3_impl(s, cfg, false);
}

double vacuum_p1(const Scenario& s, const QuadratureConfig& cfg) {
    s.validate();
    if (!(cfg.uv_damping > 0.0))
        throw DomainError("vacuum_p1: uv_damping must be positive");
    const double T = s.t_f - s.t_i;
    const double m2 = s.mass * s.mass;
    const double weg = s.omega_eg;
    const double eps = cfg.uv_damping;
    const auto f = [=](double k) -> cplx {
        const double w = std::sqrt(k * k + m2);
        if (w == 0.0) return 0.0;
        const double ws = w + weg;
        const double sn = std::sin(0.5 * ws * T);
        return (k * k / w) * std::exp(-eps * w) * (4.0 * sn * sn) / (ws * ws);
    };
    const double val =
        integrate_adaptive(f, 0.0, cfg.k_max, cfg, T).value.real();
    return s.c1 * s.c1 * s.m_eg_abs * s.m_eg_abs * val / (4.0 * kPi * kPi);
}

ResponseBreakdown detect(const Scenario& s, DetectorKind kind,
                         const QuadratureConfig& cfg) {
    s.validate();
    cfg.validate();
    ResponseBreakdown out;
    out.detector = kind;
    out.geometry = LightconeGeometry::of(s);
    if (kind == DetectorKind::UDD) out.epsilon_uv = cfg.uv_damping;
    const double g2 = s.g * s.g;
    switch (kind) {
        case DetectorKind::UDD:
            out.vacuum_part = vacuum_p1(s, cfg);
            out.amp_p2 = amplitude_p2(s, cfg);
            out.probability = out.vacuum_part + g2 * std::norm(out.amp_p2);
            break;
        case DetectorKind::GD:
            out.amp_p2 = amplitude_p2(s, cfg);
            out.amp_p3 = amplitude_p3_impl(s, cfg, false);
            out.probability = g2 * std::norm(0.5 * out.amp_p2 + out.amp_p3);
            break;
        case DetectorKind::MD:
            if (out.geometry.s_f2 < 0.0) {
                out.probability = 0.0;  // hard causal gate
                break;
            }
            out.amp_p2 = amplitude_p2(s, cfg);
            out.amp_p3 = amplitude_p3_impl(s, cfg, true);
            out.probability = g2 * std::norm(0.5 * out.amp_p2 + out.amp_p3);
            break;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Oracles.  These integrate over detector time directly, using only the
// closed-form damped massless propagator and the momentum-space massive
// correction; none of the Bessel / u-substitution machinery above.

namespace {

QuadratureConfig oracle_cfg(const QuadratureConfig& cfg, double eps) {
    QuadratureConfig c = cfg;
    c.uv_damping = eps;
    c.max_panels = std::max(cfg.max_panels, 200000);
    c.abs_tol = std::max(cfg.abs_tol, 1e-11);
    c.rel_tol = std::max(cfg.rel_tol, 1e-9);
    return c;
}

// Simpson of f over [t0, tf] with sqrt grading toward the cone crossing tc:
// the damped integrands keep a log spike and a smeared step there, and the
// t = tc +- u^2 substitution gives the graded nodes (and a vanishing
// integrand at the cone) that plain uniform Simpson lacks.
template <typename F>
cplx simpson_split(F&& f, double t0, double tf, double tc, int n) {
    if (tc < t0 || tc > tf) return simpson(f, t0, tf, n);
    cplx acc{0.0, 0.0};
    if (tc > t0)
        acc += simpson([&](double u) { return f(tc - u * u) * (2.0 * u); }, 0.0,
                       std::sqrt(tc - t0), n);
    if (tc < tf)
        acc += simpson([&](double u) { return f(tc + u * u) * (2.0 * u); }, 0.0,
                       std::sqrt(tf - tc), n);
    return acc;
}

} // namespace

double oracle_udd(const Scenario& s, int grid_n, const QuadratureConfig& cfg) {
    s.validate();
    if (grid_n < 64) throw DomainError("oracle_udd: grid_n must be >= 64");
    if (!(cfg.uv_damping > 0.0))
        throw DomainError("oracle_udd: uv_damping must be positive");
    const double r = s.r(), y0 = s.source_time, w = s.omega_eg;
    const double t0 = std::max(s.t_i, y0);
    if (!(t0 < s.t_f)) return 0.0;
    const double tc = y0 + r;
    const Mass m(s.mass);

    cplx a_delta{0.0, 0.0};
    if (tc >= t0 && tc <= s.t_f)
        a_delta = -std::exp(cplx(0.0, w * tc)) / (4.0 * kPi * r);

    const auto corr_amp = [&](double eps) -> cplx {
        const QuadratureConfig c = oracle_cfg(cfg, eps);
        const auto f = [&](double t) -> cplx {
            const cplx d = wightman_massive_correction({r, t - y0}, m, c);
            return std::exp(cplx(0.0, w * t)) * (2.0 * d.imag());
        };
        return simpson_split(f, t0, s.t_f, tc, grid_n);
    };
    const double eps = cfg.uv_damping;
    const cplx a_corr = 2.0 * corr_amp(0.5 * eps) - corr_amp(eps);

    const double scale = s.g * s.g * s.c1 * s.c1 * s.m_eg_abs * s.m_eg_abs;
    return scale * std::norm(a_delta + a_corr);
}

double oracle_gd(const Scenario& s, int grid_n, const QuadratureConfig& cfg) {
    s.validate();
    if (grid_n < 64) throw DomainError("oracle_gd: grid_n must be >= 64");
    if (!(cfg.uv_damping > 0.0))
        throw DomainError("oracle_gd: uv_damping must be positive");
    const double r = s.r(), y0 = s.source_time, w = s.omega_eg;
    const double t0 = std::max(s.t_i, y0);
    if (!(t0 < s.t_f)) return 0.0;
    const double tc = y0 + r;
    const Mass m(s.mass);

    // massless part via the exact damped closed form, small fixed damping
    const double eps0 = 1e-6;
    const auto f0 = [&](double t) -> cplx {
        return std::exp(cplx(0.0, w * t)) * wightman_massless({r, t - y0}, eps0);
    };
    QuadratureConfig c0 = oracle_cfg(cfg, eps0);
    cplx a0 = integrate_adaptive(f0, t0, s.t_f, c0, w).value;

    const auto corr_amp = [&](double eps) -> cplx {
        const QuadratureConfig c = oracle_cfg(cfg, eps);
        const auto f = [&](double t) -> cplx {
            return std::exp(cplx(0.0, w * t)) *
                   wightman_massive_correction({r, t - y0}, m, c);
        };
        return simpson_split(f, t0, s.t_f, tc, grid_n);
    };
    const double eps = cfg.uv_damping;
    const cplx a_corr = 2.0 * corr_amp(0.5 * eps) - corr_amp(eps);

    const double scale = s.g * s.g * s.c1 * s.c1 * s.m_eg_abs * s.m_eg_abs;
    return scale * std::norm(a0 + a_corr);
}

} // namespace qdet
