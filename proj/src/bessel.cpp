#include "qdet/bessel.hpp"
#include "qdet/errors.hpp"

#include <cmath>
#include <limits>
#include <quadmath.h>

namespace qdet::bessel {

namespace {

constexpr long double kPiL = 3.14159265358979323846264338327950288L;
constexpr long double kEulerGammaL = 0.57721566490153286060651209008240243L;

void require_finite(double x, const char* who) {
    if (!std::isfinite(x))
        throw DomainError(std::string(who) + ": non-finite argument");
}

// Ascending series for J0/J1, long double accumulation.  Usable up to
// x ~ 16 before roundoff in the alternating sum grows past ~1e-13.
long double j_series(int nu, long double x) {
    const long double q = 0.25L * x * x;
    long double term = (nu == 0) ? 1.0L : 0.5L * x;
    long double sum = term;
    for (int k = 1; k < 200; ++k) {
        term *= -q / (static_cast<long double>(k) * (k + nu));
        sum += term;
        if (fabsl(term) < 1e-25L * fabsl(sum) + 1e-4900L) break;
    }
    return sum;
}

// Backward (Miller) recurrence with even-order normalization; gives J0 and
// J1 to near machine precision for moderate-to-large x.
void j01_miller(double x, double& j0_out, double& j1_out) {
    const int n_start = static_cast<int>(x + 20.0 + 12.0 * std::sqrt(x)) | 1;
    long double bp = 0.0L;      // B_{n+1}
    long double bc = 1e-30L;    // B_n
    long double even_sum = 0.0L, b1 = 0.0L, b0 = 0.0L;
    for (int n = n_start; n >= 1; --n) {
        long double bm = (2.0L * n / x) * bc - bp;
        bp = bc;
        bc = bm;
        const int idx = n - 1;
        if (idx == 1) b1 = bc;
        if (idx == 0) b0 = bc;
        if (idx >= 2 && idx % 2 == 0) even_sum += bc;
        if (fabsl(bc) > 1e280L) {
            bc *= 1e-280L;
            bp *= 1e-280L;
            even_sum *= 1e-280L;
            b1 *= 1e-280L;
        }
    }
    const long double norm = b0 + 2.0L * even_sum;
    j0_out = static_cast<double>(b0 / norm);
    j1_out = static_cast<double>(b1 / norm);
}

// Hankel asymptotic expansion, truncated at the smallest term.  Adequate
// below 1e-12 (absolute, versus the sqrt(2/pi x) envelope) for x >= 16.
long double hankel(int nu, long double x, bool want_y) {
    const long double mu = 4.0L * nu * nu;
    long double p = 0.0L, q = 0.0L;
    long double t = 1.0L;
    long double prev = std::numeric_limits<long double>::max();
    for (int j = 0; j < 80; ++j) {
        const long double mag = fabsl(t);
        if (mag > prev) break;  // divergent tail reached
        prev = mag;
        const int k = j / 2;
        const long double signed_t = (k % 2 == 0) ? t : -t;
        if (j % 2 == 0)
            p += signed_t;
        else
            q += signed_t;
        t *= (mu - (2.0L * j + 1.0L) * (2.0L * j + 1.0L)) / ((j + 1.0L) * 8.0L * x);
        if (mag < 1e-22L) break;
    }
    const long double chi = x - (2 * nu + 1) * kPiL / 4.0L;
    const long double amp = sqrtl(2.0L / (kPiL * x));
    return want_y ? amp * (sinl(chi) * p + cosl(chi) * q)
                  : amp * (cosl(chi) * p - sinl(chi) * q);
}

// Sum part of the Y series: sum_k (-1)^k [psi(k+1)+psi(nu+k+1)] /
// (k! (nu+k)!) (x/2)^{2k+nu}.
long double y_psi_sum(int nu, long double x) {
    const long double q = 0.25L * x * x;
    long double fac = (nu == 0) ? 1.0L : 0.5L * x;  // (x/2)^nu / nu!
    long double psi_a = -kEulerGammaL;              // psi(1)
    long double psi_b = -kEulerGammaL;              // psi(nu+1)
    for (int j = 1; j <= nu; ++j) psi_b += 1.0L / j;
    long double term = fac * (psi_a + psi_b);
    long double sum = term;
    for (int k = 1; k < 200; ++k) {
        fac *= -q / (static_cast<long double>(k) * (k + nu));
        psi_a += 1.0L / k;
        psi_b += 1.0L / (k + nu);
        term = fac * (psi_a + psi_b);
        sum += term;
        if (fabsl(term) < 1e-25L * fabsl(sum) + 1e-4900L) break;
    }
    return sum;
}

long double y1_series_regular(long double x) {
    // Y1 + 2/(pi x) = (2/pi) ln(x/2) J1 - (1/pi) * psi-sum
    return (2.0L / kPiL) * logl(0.5L * x) * j_series(1, x)
           - y_psi_sum(1, x) / kPiL;
}

// K1 - 1/x by ascending series, long double: fine for x <= 2.
long double k1_series_regular(long double x) {
    const long double q = 0.25L * x * x;
    // I1
    long double term = 0.5L * x;
    long double i1 = term;
    for (int k = 1; k < 100; ++k) {
        term *= q / (static_cast<long double>(k) * (k + 1));
        i1 += term;
        if (term < 1e-25L * i1) break;
    }
    // sum_k [psi(k+1)+psi(k+2)] (x^2/4)^k / (k!(k+1)!)
    long double fac = 1.0L;
    long double psi_a = -kEulerGammaL;
    long double psi_b = 1.0L - kEulerGammaL;
    long double s = psi_a + psi_b;
    for (int k = 1; k < 100; ++k) {
        fac *= q / (static_cast<long double>(k) * (k + 1));
        psi_a += 1.0L / k;
        psi_b += 1.0L / (k + 1);
        s += fac * (psi_a + psi_b);
        if (fac < 1e-25L) break;
    }
    return logl(0.5L * x) * i1 - 0.25L * x * s;
}

// Same series in binary128; the ln(x/2)*I1 against-sum cancellation grows
// like e^x, so this midrange branch needs the extra headroom (x in (2,13)).
double k1_series_q(double xd) {
    const __float128 x = xd;
    const __float128 q = 0.25Q * x * x;
    __float128 term = 0.5Q * x;
    __float128 i1 = term;
    for (int k = 1; k < 200; ++k) {
        term *= q / (static_cast<__float128>(k) * (k + 1));
        i1 += term;
        if (term < 1e-40Q * i1) break;
    }
    __float128 fac = 1.0Q;
    __float128 psi_a = -0.57721566490153286060651209008240243Q;
    __float128 psi_b = psi_a + 1.0Q;
    __float128 s = psi_a + psi_b;
    for (int k = 1; k < 200; ++k) {
        fac *= q / (static_cast<__float128>(k) * (k + 1));
        psi_a += 1.0Q / k;
        psi_b += 1.0Q / (k + 1);
        s += fac * (psi_a + psi_b);
        if (fac < 1e-40Q * fabsq(s) + 1e-400Q) break;
    }
    const __float128 k1 = 1.0Q / x + logq(0.5Q * x) * i1 - 0.25Q * x * s;
    return static_cast<double>(k1);
}

double k1_asymptotic(double x) {
    // e^{-x} sqrt(pi/2x) * sum, truncated at the smallest term; below
    // 1e-11 relative for x >= 13.
    long double t = 1.0L, sum = 1.0L;
    long double prev = std::numeric_limits<long double>::max();
    for (int j = 0; j < 60; ++j) {
        t *= (4.0L - (2.0L * j + 1.0L) * (2.0L * j + 1.0L)) / ((j + 1.0L) * 8.0L * x);
        if (fabsl(t) > prev) break;
        prev = fabsl(t);
        sum += t;
        if (fabsl(t) < 1e-20L * sum) break;
    }
    return static_cast<double>(expl(static_cast<long double>(-x))
                               * sqrtl(kPiL / (2.0L * x)) * sum);
}

} // namespace

double j0(double x) {
    require_finite(x, "bessel_j0");
    if (x < 0.0) throw DomainError("bessel_j0: negative argument");
    if (x <= 12.0) return static_cast<double>(j_series(0, x));
    double a, b;
    j01_miller(x, a, b);
    return a;
}

double j1(double x) {
    require_finite(x, "bessel_j1");
    if (x < 0.0) throw DomainError("bessel_j1: negative argument");
    if (x <= 12.0) return static_cast<double>(j_series(1, x));
    double a, b;
    j01_miller(x, a, b);
    return b;
}

double y0(double x) {
    require_finite(x, "bessel_y0");
    if (x <= 0.0) throw DomainError("bessel_y0: argument must be positive");
    if (x > 16.0) return static_cast<double>(hankel(0, x, true));
    return static_cast<double>((2.0L / kPiL) * logl(0.5L * static_cast<long double>(x))
                                   * j_series(0, x)
                               - y_psi_sum(0, x) / kPiL);
}

double y1(double x) {
    require_finite(x, "bessel_y1");
    if (x <= 0.0) throw DomainError("bessel_y1: argument must be positive");
    if (x > 16.0) return static_cast<double>(hankel(1, x, true));
    const long double xl = x;
    return static_cast<double>(y1_series_regular(xl) - 2.0L / (kPiL * xl));
}

double y1_regular(double x) {
    require_finite(x, "bessel_y1_regular");
    if (x <= 0.0) throw DomainError("bessel_y1_regular: argument must be positive");
    if (x > 16.0)
        return static_cast<double>(hankel(1, x, true) + 2.0L / (kPiL * static_cast<long double>(x)));
    return static_cast<double>(y1_series_regular(x));
}

double k1(double x) {
    require_finite(x, "bessel_k1");
    if (x <= 0.0) throw DomainError("bessel_k1: argument must be positive");
    if (x <= 2.0) {
        const long double xl = x;
        return static_cast<double>(k1_series_regular(xl) + 1.0L / xl);
    }
    if (x < 13.0) return k1_series_q(x);
    return k1_asymptotic(x);
}

double k1_regular(double x) {
    require_finite(x, "bessel_k1_regular");
    if (x <= 0.0) throw DomainError("bessel_k1_regular: argument must be positive");
    if (x <= 2.0) return static_cast<double>(k1_series_regular(static_cast<long double>(x)));
    if (x < 13.0) return k1_series_q(x) - 1.0 / x;
    return k1_asymptotic(x) - 1.0 / x;
}

} // namespace qdet::bessel
