#include "qdet/sweep.hpp"
#include "qdet/errors.hpp"

#include <cmath>

namespace qdet {

std::string to_string(SweepAxis a) {
    switch (a) {
        case SweepAxis::R: return "r";
        case SweepAxis::TF: return "t_f";
        case SweepAxis::M: return "m";
        case SweepAxis::OmegaEg: return "omega_eg";
    }
    return "?";
}

SweepAxis sweep_axis_from_string(const std::string& s) {
    if (s == "r") return SweepAxis::R;
    if (s == "t_f") return SweepAxis::TF;
    if (s == "m") return SweepAxis::M;
    if (s == "omega_eg") return SweepAxis::OmegaEg;
    throw DomainError("unknown sweep axis '" + s + "' (want r|t_f|m|omega_eg)");
}

std::string to_string(SourceTiming t) {
    switch (t) {
        case SourceTiming::BeforeWindow: return "source-before-window";
        case SourceTiming::InsideWindow: return "source-inside-window";
        case SourceTiming::AfterWindow: return "source-after-window";
    }
    return "?";
}

void SweepSpec::validate() const {
    if (!(start < stop)) throw DomainError("SweepSpec: need start < stop");
    if (n < 2) throw DomainError("SweepSpec: need n >= 2");
    if (log_scale && !(start > 0.0))
        throw DomainError("SweepSpec: log scale requires start > 0");
}

std::vector<double> SweepSpec::grid() const {
    validate();
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) {
        const double f = static_cast<double>(i) / (n - 1);
        g[i] = log_scale ? start * std::pow(stop / start, f)
                         : start + (stop - start) * f;
    }
    return g;
}

namespace {

Scenario with_axis_value(const Scenario& base, SweepAxis axis, double v) {
    Scenario s = base;
    switch (axis) {
        case SweepAxis::R: {
            const double r0 = base.r();
            const double ux = (base.detector_pos.x - base.source_pos.x) / r0;
            const double uy = (base.detector_pos.y - base.source_pos.y) / r0;
            const double uz = (base.detector_pos.z - base.source_pos.z) / r0;
            s.detector_pos = {base.source_pos.x + v * ux,
                              base.source_pos.y + v * uy,
                              base.source_pos.z + v * uz};
            break;
        }
        case SweepAxis::TF: s.t_f = v; break;
        case SweepAxis::M: s.mass = v; break;
        case SweepAxis::OmegaEg: s.omega_eg = v; break;
    }
    return s;
}

} // namespace

std::vector<SweepRow> run_sweep(const Scenario& scen, DetectorKind kind,
                                const SweepSpec& spec, const QuadratureConfig& cfg) {
    scen.validate();
    std::vector<SweepRow> rows;
    for (double v : spec.grid()) {
        SweepRow row;
        row.axis_value = v;
        try {
            const Scenario s = with_axis_value(scen, spec.axis, v);
            try {  // keep the geometry columns even when detect fails below
                const LightconeGeometry g = LightconeGeometry::of(s);
                row.timing = g.timing;
                row.on_cone = g.on_cone;
            } catch (const std::exception&) {
            }
            const ResponseBreakdown b = detect(s, kind, cfg);
            row.probability = b.probability;
            row.vacuum_part = b.vacuum_part;
            row.abs_p2 = std::abs(b.amp_p2);
            row.abs_p3 = std::abs(b.amp_p3);
            row.timing = b.geometry.timing;
            row.on_cone = b.geometry.on_cone;
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

CausalityReport causality_scan(const Scenario& scen, const QuadratureConfig& cfg) {
    scen.validate();
    const double r_lc = scen.t_f - scen.source_time;
    if (!(r_lc > 0.0))
        throw DomainError("causality_scan: window must end after the kick (t_f > y0)");

    // coarse flanks plus a fine band straddling the cone radius
    std::vector<double> grid;
    const auto add_band = [&](double lo, double hi, int n) {
        for (int i = 0; i < n; ++i)
            grid.push_back(lo + (hi - lo) * (i + 0.5) / n);
    };
    add_band(0.25 * r_lc, 0.9 * r_lc, 40);
    add_band(0.9 * r_lc, 1.1 * r_lc, 80);
    add_band(1.1 * r_lc, 2.0 * r_lc, 40);

    CausalityReport rep;
    rep.r_lc = r_lc;
    rep.grid_step = 0.2 * r_lc / 80;

    const double vac = vacuum_p1(scen, cfg);
    for (DetectorKind kind :
         {DetectorKind::UDD, DetectorKind::GD, DetectorKind::MD}) {
        double interior_max = 0.0;
        std::vector<double> response(grid.size(), 0.0);
        for (size_t i = 0; i < grid.size(); ++i) {
            try {
                const Scenario s = with_axis_value(scen, SweepAxis::R, grid[i]);
                const ResponseBreakdown b = detect(s, kind, cfg);
                response[i] = b.probability -
                              (kind == DetectorKind::UDD ? vac : 0.0);
            } catch (const std::exception&) {
                response[i] = 0.0;  // isolated on-cone tie; skip the point
            }
            if (grid[i] < r_lc) interior_max = std::max(interior_max, response[i]);
        }
        CausalityVerdict v;
        v.kind = kind;
        v.floor = 1e-12 * interior_max;
        for (size_t i = 0; i < grid.size(); ++i)
            if (response[i] > v.floor)
                v.largest_responding_r = std::max(v.largest_responding_r, grid[i]);
        v.verdict = (v.largest_responding_r <= r_lc + 1.5 * rep.grid_step)
                        ? "causal-gated"
                        : "space-like-tail";
        rep.verdicts.push_back(std::move(v));
    }
    return rep;
}

} // namespace qdet
