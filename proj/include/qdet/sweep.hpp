#pragma once

#include "qdet/response.hpp"

#include <string>
#include <vector>

namespace qdet {

enum class SweepAxis { R, TF, M, OmegaEg };

std::string to_string(SweepAxis a);
SweepAxis sweep_axis_from_string(const std::string& s);  // r|t_f|m|omega_eg

struct SweepSpec {
    SweepAxis axis = SweepAxis::R;
    double start = 0.0;
    double stop = 0.0;
    int n = 2;
    bool log_scale = false;
    void validate() const;
    std::vector<double> grid() const;
};

struct SweepRow {
    double axis_value = 0.0;
    double probability = 0.0;
    double vacuum_part = 0.0;
    double abs_p2 = 0.0;
    double abs_p3 = 0.0;
    SourceTiming timing = SourceTiming::BeforeWindow;
    bool on_cone = false;
    std::string error;  // empty on success; row kept with zeros otherwise
};

std::string to_string(SourceTiming t);

// Applies the axis value to a copy of scen (R rescales detector_pos along
// the source->detector direction) and runs detect per point.  Per-row
// failures land in the error column; the run continues.
std::vector<SweepRow> run_sweep(const Scenario& scen, DetectorKind kind,
                                const SweepSpec& spec, const QuadratureConfig& cfg);

struct CausalityVerdict {
    DetectorKind kind = DetectorKind::UDD;
    double largest_responding_r = 0.0;  // largest r with source response > floor
    double floor = 0.0;
    std::string verdict;                // "causal-gated" | "space-like-tail"
};

struct CausalityReport {
    double r_lc = 0.0;       // t_f - y0
    double grid_step = 0.0;  // resolution of the fine band around r_lc
    std::vector<CausalityVerdict> verdicts;  // one per detector kind
};

// Sweeps r across [0.25, 2] * r_lc with a finer band near r_lc, measuring
// the source-dependent response (probability minus vacuum for UDD) per
// detector kind against a floor of 1e-12 * the interior maximum.
CausalityReport causality_scan(const Scenario& scen, const QuadratureConfig& cfg);

} // namespace qdet
