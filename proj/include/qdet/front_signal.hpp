#pragma once

#include <span>

namespace qdet {

// Sharp-front coherent signal: Re V(z,t) = f0 on t - z in [0, dz], else 0.
// The analytic-signal partner Im V is fixed by a Hilbert transform and is
// nonzero for every t, including ahead of the front (the precursor).
struct FrontSignal {
    double f0 = 1.0;
    double dz = 0.1;   // front length, > 0
    double z = 0.0;    // observation position
    double t = 0.0;    // observation time
    void validate() const;
};

double re_v(const FrontSignal& sig);

// (f0/pi) ln| (t-z) / (t-z-dz) |.  Evaluation within 1e-9 of the log
// singularities at t-z = 0 or dz is a domain error.
double im_v_analytic(const FrontSignal& sig);

double mean_field(const FrontSignal& sig);   // <Phi> = 2 Re V

// Discrete principal-value Hilbert transform of uniform samples taken at
// t_j = window_start + j*h: (1/pi) sum_j samples[j] * h / (t_eval - t_j),
// skipping bins with |t_eval - t_j| < h/2.  t_eval must lie strictly
// inside the sampled window.
double hilbert_numeric(std::span<const double> samples, double window_start,
                       double h, double t_eval);

// G(x,x) = (Re V)^2 + (Im V)^2: the counting rate, positive even where the
// mean field still vanishes.
double glauber_g(const FrontSignal& sig);

} // namespace qdet
