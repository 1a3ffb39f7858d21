#pragma once

#include "qdet/front_signal.hpp"
#include "qdet/localization.hpp"
#include "qdet/response.hpp"
#include "qdet/sweep.hpp"

#include <string>
#include <vector>

namespace qdet {

// All emitters: RFC-4180-style CSV, header row, reals at 17 significant
// digits, complex values as re/im column pairs, byte-stable for identical
// inputs.

std::string csv_real(double v);

std::string emit_csv(const ResponseBreakdown& b);
std::string emit_csv(const std::vector<SweepRow>& rows);
std::string emit_csv(const DensityProfile& prof);
std::string emit_csv(const CausalityReport& rep);

struct FrontScanRow {
    double t = 0.0;
    double re = 0.0;
    double im = 0.0;
    double mean = 0.0;
    double g = 0.0;
    std::string error;  // non-empty when this grid point failed (front edge)
};
std::string emit_csv(const std::vector<FrontScanRow>& rows);

} // namespace qdet
