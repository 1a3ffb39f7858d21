#include "qdet/quadrature.hpp"
#include "qdet/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace qdet {

namespace {

// 15-point Kronrod abscissae/weights with the embedded 7-point Gauss rule.
constexpr double xgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double wgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    std::complex<double> value;
    double err;
};

Panel gk15(const Integrand& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    std::complex<double> fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * xgk[i]);
        fv[14 - i] = f(c + h * xgk[i]);
    }
    fv[7] = f(c);
    for (int i = 0; i < 15; ++i) {
        if (!std::isfinite(fv[i].real()) || !std::isfinite(fv[i].imag())) {
            const double x = (i < 7) ? c - h * xgk[i] : (i == 7 ? c : c + h * xgk[14 - i]);
            throw IntegrandError("integrand returned a non-finite value", x);
        }
    }
    std::complex<double> resk = wgk[7] * fv[7];
    std::complex<double> resg = wg[3] * fv[7];
    for (int i = 0; i < 7; ++i) {
        resk += wgk[i] * (fv[i] + fv[14 - i]);
        if (i % 2 == 1) resg += wg[i / 2] * (fv[i] + fv[14 - i]);
    }
    Panel p;
    p.a = a;
    p.b = b;
    p.value = h * resk;
    p.err = std::abs(h * (resk - resg));
    return p;
}

std::complex<double> stable_sum(std::vector<Panel>& panels, double& err_out) {
    // Sum in interval order so the result is independent of the order in
    // which panels happened to be refined.
    std::sort(panels.begin(), panels.end(),
              [](const Panel& x, const Panel& y) { return x.a < y.a; });
    std::complex<double> v{0.0, 0.0};
    double e = 0.0;
    for (const Panel& p : panels) {
        v += p.value;
        e += p.err;
    }
    err_out = e;
    return v;
}

} // namespace

void QuadratureConfig::validate() const {
    if (!(abs_tol >= 0.0) || !(rel_tol >= 0.0) || !(abs_tol + rel_tol > 0.0))
        throw DomainError("quadrature: tolerances must be non-negative and not both zero");
    if (max_panels < 16)
        throw DomainError("quadrature: max_panels must be at least 16");
    if (!(pv_excision > 0.0))
        throw DomainError("quadrature: pv_excision must be positive");
    if (!(uv_damping >= 0.0))
        throw DomainError("quadrature: uv_damping must be non-negative");
    if (!(k_max > 0.0))
        throw DomainError("quadrature: k_max must be positive");
}

IntegralResult integrate_adaptive(const Integrand& f, double a, double b,
                                  const QuadratureConfig& cfg,
                                  double dominant_freq) {
    cfg.validate();
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b))
        throw DomainError("integrate_adaptive: need finite a < b");

    int n0 = 1;
    if (dominant_freq > 0.0) {
        // cap panels at ~pi/2 of phase so GK15 sees < 1 oscillation each
        const double cap = std::numbers::pi / (2.0 * dominant_freq);
        n0 = static_cast<int>(std::ceil((b - a) / cap));
        n0 = std::clamp(n0, 1, std::max(cfg.max_panels / 2, 1));
    }

    std::vector<Panel> panels;
    panels.reserve(static_cast<size_t>(n0) + 64);
    for (int i = 0; i < n0; ++i) {
        const double pa = a + (b - a) * i / n0;
        const double pb = (i == n0 - 1) ? b : a + (b - a) * (i + 1) / n0;
        panels.push_back(gk15(f, pa, pb));
    }

    const int panel_cap = std::max(cfg.max_panels, n0);
    while (true) {
        double toterr = 0.0;
        std::complex<double> totval{0.0, 0.0};
        size_t worst = 0;
        double worst_err = -1.0;
        for (size_t i = 0; i < panels.size(); ++i) {
            toterr += panels[i].err;
            totval += panels[i].value;
            if (panels[i].err > worst_err) {
                worst_err = panels[i].err;
                worst = i;
            }
        }
        const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(totval));
        if (toterr <= tol) break;
        if (static_cast<int>(panels.size()) >= panel_cap) {
            double e;
            std::complex<double> v = stable_sum(panels, e);
            throw ConvergenceError("integrate_adaptive: panel budget exhausted", v, e);
        }
        const Panel old = panels[worst];
        const double mid = 0.5 * (old.a + old.b);
        if (!(old.a < mid && mid < old.b)) {
            double e;
            std::complex<double> v = stable_sum(panels, e);
            throw ConvergenceError("integrate_adaptive: panel width underflow", v, e);
        }
        panels[worst] = gk15(f, old.a, mid);
        panels.push_back(gk15(f, mid, old.b));
    }

    IntegralResult r;
    r.value = stable_sum(panels, r.error_estimate);
    r.panels_used = static_cast<int>(panels.size());
    return r;
}

IntegralResult integrate_sqrt_endpoint(const Integrand& f_smooth, double a,
                                       double b, const QuadratureConfig& cfg,
                                       double dominant_freq) {
    if (!(a >= 0.0) || !(a < b))
        throw DomainError("integrate_sqrt_endpoint: need 0 <= a < b");
    // int_a^b f(u)/sqrt(u) du = int_sqrt(a)^sqrt(b) 2 f(w^2) dw
    const double wa = std::sqrt(a), wb = std::sqrt(b);
    // phase omega*u = omega*w^2; local frequency 2*omega*w, worst at wb
    const double freq_w = dominant_freq > 0.0 ? 2.0 * dominant_freq * wb : 0.0;
    return integrate_adaptive(
        [&](double w) { return 2.0 * f_smooth(w * w); }, wa, wb, cfg, freq_w);
}

IntegralResult integrate_principal_value(const Integrand& f_reg, double a,
                                         double b, std::complex<double> strength,
                                         const QuadratureConfig& cfg,
                                         double dominant_freq) {
    cfg.validate();
    if (!(a < 0.0) || !(b > 0.0))
        throw DomainError("integrate_principal_value: need a < 0 < b");
    const double d0 = cfg.pv_excision;
    if (!(d0 < 0.5 * std::min(-a, b)))
        throw DomainError("integrate_principal_value: excision too wide for interval");

    auto evaluate = [&](double d) -> IntegralResult {
        // [d, b]: absorb the integrable endpoint behaviour of f_reg
        // (sqrt / log) with the sqrt-endpoint engine.
        IntegralResult pos = integrate_sqrt_endpoint(
            [&](double u) { return f_reg(u) * std::sqrt(u); }, d, b, cfg,
            dominant_freq);
        // [a, -d] mirrored onto [d, |a|]
        IntegralResult neg = integrate_sqrt_endpoint(
            [&](double v) { return f_reg(-v) * std::sqrt(v); }, d, -a, cfg,
            dominant_freq);
        IntegralResult out;
        out.value = pos.value + neg.value + strength * std::log(b / (-a));
        out.error_estimate = pos.error_estimate + neg.error_estimate;
        out.panels_used = pos.panels_used + neg.panels_used;
        return out;
    };

    IntegralResult coarse = evaluate(d0);
    IntegralResult fine = evaluate(0.5 * d0);
    const double drift = std::abs(fine.value - coarse.value);
    // the excised strip carries O(d * f_reg) of genuine (integrable) mass;
    // budget for it so tight tolerances do not trip the stability check
    const double strip =
        d0 * (std::abs(f_reg(d0)) + std::abs(f_reg(-d0)));
    const double allow =
        std::max(cfg.abs_tol, cfg.rel_tol * std::abs(fine.value)) * 10.0 +
        2.0 * (coarse.error_estimate + fine.error_estimate) + strip;
    if (drift > allow)
        throw ConvergenceError(
            "integrate_principal_value: value not stable under halving the excision",
            fine.value, drift);
    fine.error_estimate += drift;
    return fine;
}

} // namespace qdet
