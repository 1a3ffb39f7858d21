#include "qdet/propagators.hpp"
#include "qdet/bessel.hpp"
#include "qdet/errors.hpp"

#include <cmath>
#include <numbers>

namespace qdet {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kPoleStrength = -1.0 / (4.0 * kPi * kPi);

void require_damped(const QuadratureConfig& cfg, const char* who) {
    if (!(cfg.uv_damping > 0.0))
        throw DomainError(std::string(who) + ": uv_damping must be positive");
}
} // namespace

Mass::Mass(double value) : m(value) {
    if (!std::isfinite(value) || value < 0.0)
        throw DomainError("Mass: value must be finite and >= 0");
}

double pauli_jordan_smooth(double s2, Mass m) {
    if (!std::isfinite(s2)) throw DomainError("pauli_jordan_smooth: non-finite s2");
    if (s2 < 0.0 || m.m == 0.0) return 0.0;
    const double x = m.m * std::sqrt(s2);
    if (x == 0.0) return m.m * m.m / (8.0 * kPi);
    return m.m * bessel::j1(x) / (4.0 * kPi * std::sqrt(s2));
}

KernelSplit hadamard_kernel(double s2, Mass m) {
    if (!std::isfinite(s2)) throw DomainError("hadamard_kernel: non-finite s2");
    if (m.m == 0.0) return {0.0, kPoleStrength};
    if (s2 == 0.0)
        throw DomainError("hadamard_kernel: regular part is log-divergent at s2 = 0");
    if (s2 > 0.0) {
        const double sr = std::sqrt(s2);
        return {m.m * bessel::y1_regular(m.m * sr) / (8.0 * kPi * sr), kPoleStrength};
    }
    const double rho = std::sqrt(-s2);
    return {m.m * bessel::k1_regular(m.m * rho) / (4.0 * kPi * kPi * rho),
            kPoleStrength};
}

std::complex<double> wightman_closed(IntervalPoint p, Mass m) {
    const double s2 = p.s2();
    if (s2 == 0.0)
        throw DomainError("wightman_closed: on the light cone");
    const KernelSplit k = hadamard_kernel(s2, m);
    const double sign = (p.t > 0.0) ? 1.0 : (p.t < 0.0 ? -1.0 : 0.0);
    return {k.regular + k.pole_strength / s2,
            0.5 * sign * pauli_jordan_smooth(s2, m)};
}

std::complex<double> wightman_momentum_oracle(IntervalPoint p, Mass m,
                                              const QuadratureConfig& cfg) {
    require_damped(cfg, "wightman_momentum_oracle");
    if (!(p.r > 0.0))
        throw DomainError("wightman_momentum_oracle: r must be positive");
    const double r = p.r, t = p.t, eps = cfg.uv_damping, m2 = m.m * m.m;
    const auto f = [=](double k) -> std::complex<double> {
        const double w = std::sqrt(k * k + m2);
        if (w == 0.0) return 0.0;
        return k * std::sin(k * r) * std::exp(-eps * w) *
               std::exp(std::complex<double>(0.0, -w * t)) / w;
    };
    IntegralResult res = integrate_adaptive(f, 0.0, cfg.k_max, cfg, r + std::abs(t));
    return res.value / (4.0 * kPi * kPi * r);
}

std::complex<double> wightman_massless(IntervalPoint p, double eps) {
    const std::complex<double> d(p.t * p.t - p.r * p.r - eps * eps,
                                 -2.0 * eps * p.t);
    return -1.0 / (4.0 * kPi * kPi * d);
}

std::complex<double> wightman_massive_correction(IntervalPoint p, Mass m,
                                                 const QuadratureConfig& cfg) {
    require_damped(cfg, "wightman_massive_correction");
    if (!(p.r > 0.0))
        throw DomainError("wightman_massive_correction: r must be positive");
    const double r = p.r, t = p.t, eps = cfg.uv_damping, m2 = m.m * m.m;
    const auto f = [=](double k) -> std::complex<double> {
        const double w = std::sqrt(k * k + m2);
        const std::complex<double> massive =
            (w > 0.0) ? (k / w) * std::exp(-eps * w) *
                            std::exp(std::complex<double>(0.0, -w * t))
                      : std::complex<double>(0.0, 0.0);
        const std::complex<double> massless =
            std::exp(-eps * k) * std::exp(std::complex<double>(0.0, -k * t));
        return std::sin(k * r) * (massive - massless);
    };
    IntegralResult res = integrate_adaptive(f, 0.0, cfg.k_max, cfg, r + std::abs(t));
    return res.value / (4.0 * kPi * kPi * r);
}

std::complex<double> vacuum_wightman_equal_point(double tau, Mass m,
                                                 const QuadratureConfig& cfg) {
    require_damped(cfg, "vacuum_wightman_equal_point");
    const double eps = cfg.uv_damping, m2 = m.m * m.m;
    const auto f = [=](double k) -> std::complex<double> {
        const double w = std::sqrt(k * k + m2);
        if (w == 0.0) return 0.0;
        return (k * k / w) * std::exp(-eps * w) *
               std::exp(std::complex<double>(0.0, -w * tau));
    };
    IntegralResult res = integrate_adaptive(f, 0.0, cfg.k_max, cfg, std::abs(tau));
    return res.value / (4.0 * kPi * kPi);
}

ThetaSplit theta_frequency_split(double tau, double eps, double omega_cap,
                                 const QuadratureConfig& cfg) {
    if (!(eps > 0.0) || !(omega_cap > 0.0))
        throw DomainError("theta_frequency_split: eps and omega_cap must be positive");
    const auto f = [=](double w) -> std::complex<double> {
        return std::exp(std::complex<double>(0.0, -w * tau)) /
               std::complex<double>(w, eps);
    };
    const std::complex<double> pref(0.0, 1.0 / (2.0 * kPi));  // -1/(2 pi i)
    ThetaSplit out;
    out.plus = pref * integrate_adaptive(f, 0.0, omega_cap, cfg, std::abs(tau)).value;
    out.minus = pref * integrate_adaptive(f, -omega_cap, 0.0, cfg, std::abs(tau)).value;
    return out;
}

} // namespace qdet
