#include <doctest.h>

#include "qdet/bessel.hpp"
#include "qdet/errors.hpp"
#include "qdet/propagators.hpp"

#include <cmath>
#include <complex>
#include <numbers>

using namespace qdet;
using cplx = std::complex<double>;

namespace {
constexpr double kPi = std::numbers::pi;

QuadratureConfig oracle_cfg() {
    QuadratureConfig c;
    c.uv_damping = 2e-3;
    c.k_max = 20000.0;
    c.max_panels = 400000;
    c.rel_tol = 1e-9;
    return c;
}
} // namespace

TEST_CASE("pauli_jordan_smooth basics") {
    const Mass m(1.0);
    CHECK(pauli_jordan_smooth(-1.0, m) == 0.0);  // space-like: exact zero
    CHECK(pauli_jordan_smooth(0.0, m) ==
          doctest::Approx(1.0 / (8.0 * kPi)).epsilon(1e-12));
    // s2 = 4: m J1(2)/(4 pi * 2) = J1(2)/(8 pi)
    CHECK(pauli_jordan_smooth(4.0, m) ==
          doctest::Approx(bessel::j1(2.0) / (8.0 * kPi)).epsilon(1e-12));
    CHECK(pauli_jordan_smooth(3.0, Mass(0.0)) == 0.0);
}

TEST_CASE("hadamard kernel split") {
    const Mass m(1.0);
    const KernelSplit timelike = hadamard_kernel(4.0, m);
    CHECK(timelike.pole_strength ==
          doctest::Approx(-1.0 / (4.0 * kPi * kPi)).epsilon(1e-15));
    // reassembled kernel equals the raw Y1 form away from the cone
    const double raw_t = 1.0 * bessel::y1(2.0) / (8.0 * kPi * 2.0);
    CHECK(timelike.regular + timelike.pole_strength / 4.0 ==
          doctest::Approx(raw_t).epsilon(1e-11));

    const KernelSplit spacelike = hadamard_kernel(-4.0, m);
    const double raw_s = 1.0 * bessel::k1(2.0) / (4.0 * kPi * kPi * 2.0);
    CHECK(spacelike.regular + spacelike.pole_strength / (-4.0) ==
          doctest::Approx(raw_s).epsilon(1e-11));
    CHECK(raw_s > 0.0);  // space-like tail is positive

    const KernelSplit massless = hadamard_kernel(-4.0, Mass(0.0));
    CHECK(massless.regular == 0.0);
    CHECK_THROWS_AS((void)hadamard_kernel(0.0, m), DomainError);
}

TEST_CASE("closed form vs momentum oracle") {
    const QuadratureConfig cfg = oracle_cfg();
    const Mass m(1.0);
    for (const IntervalPoint p :
         {IntervalPoint{1.0, 2.0}, IntervalPoint{2.0, 1.0}, IntervalPoint{1.0, 3.5},
          IntervalPoint{3.0, 0.5}}) {
        CAPTURE(p.r);
        CAPTURE(p.t);
        const cplx closed = wightman_closed(p, m);
        // Richardson in the damping: the O(eps) smearing cancels
        QuadratureConfig half = cfg;
        half.uv_damping = 0.5 * cfg.uv_damping;
        const cplx oracle = 2.0 * wightman_momentum_oracle(p, m, half) -
                            wightman_momentum_oracle(p, m, cfg);
        CHECK(std::abs(closed - oracle) < 1e-3 * std::abs(closed) + 1e-7);
    }
}

TEST_CASE("massless closed form matches the damped mode sum exactly") {
    QuadratureConfig cfg = oracle_cfg();
    cfg.uv_damping = 0.05;  // need eps*k_max >> 1 for negligible truncation
    const IntervalPoint p{1.2, 0.7};
    const cplx closed = wightman_massless(p, cfg.uv_damping);
    const cplx oracle = wightman_momentum_oracle(p, Mass(0.0), cfg);
    CHECK(std::abs(closed - oracle) < 1e-10);
}

TEST_CASE("massive correction ties the oracle decomposition together") {
    const QuadratureConfig cfg = oracle_cfg();
    const Mass m(1.0);
    const IntervalPoint p{1.0, 2.5};
    const cplx whole = wightman_momentum_oracle(p, m, cfg);
    const cplx parts =
        wightman_massless(p, cfg.uv_damping) + wightman_massive_correction(p, m, cfg);
    CHECK(std::abs(whole - parts) < 1e-9);
}

TEST_CASE("commutator causality from the oracle") {
    // Im Delta_+ at space-like separation: pure damping artifact, tiny
    const QuadratureConfig cfg = oracle_cfg();
    const Mass m(1.0);
    const cplx sp = wightman_momentum_oracle({3.0, 1.0}, m, cfg);
    CHECK(std::abs(sp.imag()) < 5e-3 * std::abs(sp.real()) + 1e-7);
    // and the closed form makes it an exact zero
    CHECK(wightman_closed({3.0, 1.0}, m).imag() == 0.0);
}

TEST_CASE("conjugate symmetry Delta_+(-t) = conj(Delta_+(t))") {
    const Mass m(1.0);
    for (const IntervalPoint p : {IntervalPoint{1.0, 2.0}, IntervalPoint{2.5, 1.0}}) {
        const cplx a = wightman_closed(p, m);
        const cplx b = wightman_closed({p.r, -p.t}, m);
        CHECK(std::abs(b - std::conj(a)) < 1e-14);
    }
}

TEST_CASE("equal-point vacuum Wightman function") {
    QuadratureConfig cfg;
    cfg.uv_damping = 0.05;
    const cplx w0 = vacuum_wightman_equal_point(0.0, Mass(1.0), cfg);
    CHECK(w0.real() > 0.0);
    CHECK(std::abs(w0.imag()) < 1e-10);  // tau = 0: purely real integrand
    // conjugate symmetry in tau
    const cplx wp = vacuum_wightman_equal_point(1.3, Mass(1.0), cfg);
    const cplx wm = vacuum_wightman_equal_point(-1.3, Mass(1.0), cfg);
    CHECK(std::abs(wm - std::conj(wp)) < 1e-12);
    QuadratureConfig undamped;
    undamped.uv_damping = 0.0;
    CHECK_THROWS_AS((void)vacuum_wightman_equal_point(0.0, Mass(1.0), undamped),
                    DomainError);
}

TEST_CASE("frequency-split theta function") {
    QuadratureConfig cfg;
    const double eps = 1e-3, cap = 1e3;
    for (double tau : {1.5, -1.5}) {
        const ThetaSplit ts = theta_frequency_split(tau, eps, cap, cfg);
        const double want = tau > 0.0 ? 1.0 : 0.0;
        CHECK(std::abs(ts.plus + ts.minus - want) < 0.02);
        // each half alone is nonzero even for tau < 0: the tail mechanism
        CHECK(std::abs(ts.plus) > 0.05);
        CHECK(std::abs(ts.minus) > 0.05);
    }
}
