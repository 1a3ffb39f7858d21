#include "qdet/front_signal.hpp"
#include "qdet/errors.hpp"

#include <cmath>
#include <numbers>

namespace qdet {

void FrontSignal::validate() const {
    if (!std::isfinite(f0) || !std::isfinite(dz) || !std::isfinite(z) ||
        !std::isfinite(t))
        throw DomainError("FrontSignal: non-finite field");
    if (!(dz > 0.0)) throw DomainError("FrontSignal: dz must be > 0");
}

double re_v(const FrontSignal& sig) {
    sig.validate();
    const double tau = sig.t - sig.z;
    return (tau >= 0.0 && tau <= sig.dz) ? sig.f0 : 0.0;
}

double im_v_analytic(const FrontSignal& sig) {
    sig.validate();
    const double tau = sig.t - sig.z;
    if (std::abs(tau) < 1e-9 || std::abs(tau - sig.dz) < 1e-9)
        throw DomainError("im_v_analytic: evaluation at a front edge (log singularity)");
    return (sig.f0 / std::numbers::pi) * std::log(std::abs(tau / (tau - sig.dz)));
}

double mean_field(const FrontSignal& sig) { return 2.0 * re_v(sig); }

double hilbert_numeric(std::span<const double> samples, double window_start,
                       double h, double t_eval) {
    if (!(h > 0.0)) throw DomainError("hilbert_numeric: need h > 0");
    if (samples.size() < 2) throw DomainError("hilbert_numeric: need >= 2 samples");
    const double window_end = window_start + h * (samples.size() - 1);
    if (!(t_eval > window_start) || !(t_eval < window_end))
        throw DomainError("hilbert_numeric: t_eval outside the sampled window");
    double acc = 0.0;
    for (size_t j = 0; j < samples.size(); ++j) {
        const double d = t_eval - (window_start + j * h);
        if (std::abs(d) < 0.5 * h) continue;  // skip the singular bin
        acc += samples[j] / d;
    }
    return acc * h / std::numbers::pi;
}

double glauber_g(const FrontSignal& sig) {
    const double re = re_v(sig);
    const double im = im_v_analytic(sig);
    return re * re + im * im;
}

} // namespace qdet
