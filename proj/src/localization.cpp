#include "qdet/localization.hpp"
#include "qdet/errors.hpp"

#include <cmath>
#include <numbers>

namespace qdet {

namespace {
constexpr double kPi = std::numbers::pi;
// |s^2| band around the cone where the closed-form branches are abandoned
// for the damped momentum integral (the 1/s^2 pole makes the closed form an
// eps->0 idealization that the damped observable does not reach).
constexpr double kConeBand = 0.05;
} // namespace

std::string to_string(LocalizationObservable o) {
    return o == LocalizationObservable::GlauberDensity ? "glauber" : "newton-wigner";
}

double glauber_density(double r, double t, const Scenario& scen,
                       const QuadratureConfig& cfg) {
    scen.validate();
    if (!(r > 0.0)) throw DomainError("glauber_density: r must be > 0");
    if (t <= scen.source_time) return 0.0;  // state is vacuum before the kick
    const double tau = t - scen.source_time;
    const IntervalPoint p{r, tau};
    std::complex<double> dplus;
    if (std::abs(p.s2()) < kConeBand)
        dplus = wightman_momentum_oracle(p, Mass(scen.mass), cfg);
    else
        dplus = wightman_closed(p, Mass(scen.mass));
    return scen.g * scen.g * std::norm(dplus);
}

double newton_wigner_density(double r, double t, const Scenario& scen,
                             const QuadratureConfig& cfg) {
    scen.validate();
    if (!(r > 0.0)) throw DomainError("newton_wigner_density: r must be > 0");
    if (!(cfg.uv_damping > 0.0))
        throw DomainError("newton_wigner_density: uv_damping must be positive");
    if (t <= scen.source_time) return 0.0;
    const double tau = t - scen.source_time;
    const double m2 = scen.mass * scen.mass;
    const double eps = cfg.uv_damping;
    const auto f = [=](double k) -> std::complex<double> {
        const double w = std::sqrt(k * k + m2);
        if (w == 0.0) return 0.0;
        return k * std::sin(k * r) * std::sqrt(2.0 / w) * std::exp(-eps * w) *
               std::exp(std::complex<double>(0.0, -w * tau));
    };
    const std::complex<double> rd =
        integrate_adaptive(f, 0.0, cfg.k_max, cfg, r + tau).value /
        (4.0 * kPi * kPi * r);
    return scen.g * scen.g * std::norm(rd);
}

DensityProfile density_profile(LocalizationObservable obs, double t,
                               const std::vector<double>& r_grid,
                               const Scenario& scen, const QuadratureConfig& cfg) {
    if (r_grid.empty()) throw DomainError("density_profile: empty grid");
    for (size_t i = 0; i < r_grid.size(); ++i) {
        if (!(r_grid[i] > 0.0))
            throw DomainError("density_profile: grid points must be positive");
        if (i > 0 && !(r_grid[i] > r_grid[i - 1]))
            throw DomainError("density_profile: grid must be strictly increasing");
    }
    DensityProfile prof;
    prof.observable = obs;
    prof.t = t;
    prof.r_lc = t - scen.source_time;
    prof.epsilon_uv = cfg.uv_damping;
    prof.points.reserve(r_grid.size());
    for (double r : r_grid) {
        const double v = (obs == LocalizationObservable::GlauberDensity)
                             ? glauber_density(r, t, scen, cfg)
                             : newton_wigner_density(r, t, scen, cfg);
        prof.points.emplace_back(r, v);
    }
    return prof;
}

} // namespace qdet
