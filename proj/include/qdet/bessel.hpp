#pragma once

namespace qdet::bessel {

// Cylinder functions of order 0 and 1 on the real half-line, self-contained
// (ascending series / backward recurrence / Hankel and uniform asymptotics).
// Target accuracy: J ~1e-13 relative-to-envelope, Y and K ~1e-11 or better
// on (0, 50].

double j0(double x);          // x >= 0
double j1(double x);          // x >= 0
double y0(double x);          // x > 0
double y1(double x);          // x > 0
double k1(double x);          // x > 0

// Singularity-split variants used by the light-cone kernels:
//   y1_regular(x) = Y1(x) + 2/(pi*x)
//   k1_regular(x) = K1(x) - 1/x
// evaluated without the catastrophic cancellation the naive difference has
// for small x.
double y1_regular(double x);  // x > 0
double k1_regular(double x);  // x > 0

} // namespace qdet::bessel
