#include "qdet/bessel.hpp"
#include "qdet/csv.hpp"
#include "qdet/errors.hpp"
#include "qdet/front_signal.hpp"
#include "qdet/localization.hpp"
#include "qdet/response.hpp"
#include "qdet/scenario.hpp"
#include "qdet/sweep.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

namespace {

using namespace qdet;

struct CommonOpts {
    std::string scenario_path;
    std::string detector = "udd";
    std::string out_path;
    std::optional<double> eps_uv;
    std::optional<double> tol;
};

DetectorKind kind_from_string(const std::string& s) {
    if (s == "udd") return DetectorKind::UDD;
    if (s == "gd") return DetectorKind::GD;
    if (s == "md") return DetectorKind::MD;
    throw DomainError("unknown detector kind '" + s + "' (want udd|gd|md)");
}

ParsedScenario load(const CommonOpts& c) {
    ParsedScenario p;
    if (!c.scenario_path.empty()) p = parse_scenario_file(c.scenario_path);
    if (c.eps_uv) p.numerics.uv_damping = *c.eps_uv;
    if (c.tol) p.numerics.rel_tol = *c.tol;
    return p;
}

void write_out(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw DomainError("cannot open output file '" + out_path + "'");
    f << text;
}

void add_common(CLI::App* cmd, CommonOpts& c, bool with_detector = true) {
    cmd->add_option("--scenario", c.scenario_path, "scenario file (defaults to the benchmark scenario)");
    if (with_detector)
        cmd->add_option("--detector", c.detector, "detector kind: udd|gd|md");
    cmd->add_option("--out", c.out_path, "output path (default: stdout)");
    cmd->add_option("--eps-uv", c.eps_uv, "override UV damping epsilon");
    cmd->add_option("--tol", c.tol, "override relative tolerance");
}

int run_selftest() {
    int failures = 0;
    const auto report = [&](const char* name, double residual, double limit) {
        const bool ok = residual < limit;
        if (!ok) ++failures;
        std::printf("%-44s residual %.3e  limit %.1e  %s\n", name, residual,
                    limit, ok ? "pass" : "FAIL");
    };

    // cylinder-function cross identity J1 Y0 - J0 Y1 = 2/(pi x)
    double worst = 0.0;
    for (int i = 0; i <= 499; ++i) {
        const double x = 0.1 + (50.0 - 0.1) * i / 499.0;
        const double w = bessel::j1(x) * bessel::y0(x) - bessel::j0(x) * bessel::y1(x);
        worst = std::max(worst, std::abs(w - 2.0 / (std::numbers::pi * x)));
    }
    report("cross-product identity [0.1,50]", worst, 1e-10);

    QuadratureConfig cfg;
    Scenario bench;  // benchmark defaults

    // massless commutator amplitude collapses to the light-cone term
    {
        Scenario s = bench;
        s.mass = 0.0;
        const std::complex<double> got = amplitude_p2(s, cfg);
        const std::complex<double> want =
            -std::exp(std::complex<double>(0.0, s.omega_eg * (s.source_time + s.r()))) /
            (4.0 * std::numbers::pi * s.r());
        report("massless amplitude_p2 closed form", std::abs(got - want), 1e-12);
    }

    // principal-value path exercised end to end (internal Richardson check)
    {
        const ResponseBreakdown gd = detect(bench, DetectorKind::GD, cfg);
        report("PV amplitude finite on benchmark", gd.probability >= 0.0 ? 0.0 : 1.0, 0.5);
    }

    // MD == GD for a window strictly inside the forward cone
    {
        Scenario s = bench;
        s.t_i = 1.5;
        s.t_f = 3.0;
        const double pg = detect(s, DetectorKind::GD, cfg).probability;
        const double pm = detect(s, DetectorKind::MD, cfg).probability;
        report("MD == GD strictly inside cone", std::abs(pm - pg) / pg, 1e-6);
    }

    // UDD hard causal gate
    {
        Scenario s = bench;
        s.detector_pos = {5.0, 0.0, 0.0};  // r=5 > t_f - y0 = 3
        const ResponseBreakdown b = detect(s, DetectorKind::UDD, cfg);
        report("UDD exact causal gate", std::abs(b.probability - b.vacuum_part), 1e-300);
    }

    // closed-form Wightman vs momentum oracle
    {
        const Mass m(1.0);
        double res = 0.0;
        for (const IntervalPoint p : {IntervalPoint{1.0, 2.0}, IntervalPoint{2.0, 1.0}}) {
            const std::complex<double> a = wightman_closed(p, m);
            QuadratureConfig oc = cfg;
            oc.k_max = 20000.0;
            oc.max_panels = 400000;
            // Richardson in the damping: cancels the O(eps) smear
            oc.uv_damping = 1e-3;
            const std::complex<double> fine = wightman_momentum_oracle(p, m, oc);
            oc.uv_damping = 2e-3;
            const std::complex<double> coarse = wightman_momentum_oracle(p, m, oc);
            const std::complex<double> b = 2.0 * fine - coarse;
            res = std::max(res, std::abs(a - b) / std::abs(a));
        }
        report("Wightman closed form vs momentum oracle", res, 1e-3);
    }

    std::printf(failures ? "selftest: FAIL (%d)\n" : "selftest: all checks passed\n",
                failures);
    return failures ? 4 : 0;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"two-level detector response lab: causal gating vs space-like tails"};
    app.require_subcommand(1);

    CommonOpts c_respond, c_sweep, c_front, c_loc, c_scan;

    auto* respond = app.add_subcommand("respond", "single-scenario detection probability");
    add_common(respond, c_respond);

    auto* sweep = app.add_subcommand("sweep", "sweep one axis, emit CSV");
    add_common(sweep, c_sweep);
    std::string axis = "r";
    double from = 0.5, to = 5.0;
    int n = 21;
    bool log_scale = false;
    sweep->add_option("--axis", axis, "sweep axis: r|t_f|m|omega_eg");
    sweep->add_option("--from", from, "axis start");
    sweep->add_option("--to", to, "axis stop");
    sweep->add_option("--n", n, "number of points");
    sweep->add_flag("--log", log_scale, "logarithmic spacing");

    auto* front = app.add_subcommand("frontscan", "sharp-front signal demo over a t-grid");
    add_common(front, c_front, false);
    double f0 = 1.0, dz = 0.1, z = 0.0, t_from = -1.0, t_to = 1.0;
    int t_n = 201;
    front->add_option("--f0", f0, "front amplitude");
    front->add_option("--dz", dz, "front length");
    front->add_option("--z", z, "observation position");
    front->add_option("--from", t_from, "t grid start");
    front->add_option("--to", t_to, "t grid stop");
    front->add_option("--n", t_n, "t grid points");

    auto* loc = app.add_subcommand("localization", "density profile over an r-grid");
    add_common(loc, c_loc, false);
    std::string observable = "glauber";
    double t_eval = 2.0, r_from = 0.5, r_to = 5.0;
    int r_n = 21;
    loc->add_option("--observable", observable, "glauber|nw");
    loc->add_option("--time", t_eval, "evaluation time");
    loc->add_option("--from", r_from, "r grid start");
    loc->add_option("--to", r_to, "r grid stop");
    loc->add_option("--n", r_n, "r grid points");

    auto* scan = app.add_subcommand("causality-scan", "per-detector causal boundary scan");
    add_common(scan, c_scan, false);

    auto* self = app.add_subcommand("selftest", "production-identity battery");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // help text, exit 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;  // command-line errors share the parse-error exit code
    }

    if (respond->parsed()) {
        const ParsedScenario p = load(c_respond);
        // explicit --detector beats the scenario file's kind
        const DetectorKind kind = (respond->count("--detector") || !p.kind_given)
                                      ? kind_from_string(c_respond.detector)
                                      : p.kind;
        const ResponseBreakdown b = detect(p.scenario, kind, p.numerics);
        write_out(c_respond.out_path, emit_csv(b));
        return 0;
    }
    if (sweep->parsed()) {
        const ParsedScenario p = load(c_sweep);
        SweepSpec spec;
        spec.axis = sweep_axis_from_string(axis);
        spec.start = from;
        spec.stop = to;
        spec.n = n;
        spec.log_scale = log_scale;
        const auto rows =
            run_sweep(p.scenario, kind_from_string(c_sweep.detector), spec, p.numerics);
        write_out(c_sweep.out_path, emit_csv(rows));
        return 0;
    }
    if (front->parsed()) {
        if (t_n < 2) throw DomainError("frontscan: need --n >= 2");
        std::vector<FrontScanRow> rows;
        for (int i = 0; i < t_n; ++i) {
            FrontScanRow row;
            row.t = t_from + (t_to - t_from) * i / (t_n - 1);
            FrontSignal sig{f0, dz, z, row.t};
            try {
                row.re = re_v(sig);
                row.im = im_v_analytic(sig);
                row.mean = mean_field(sig);
                row.g = glauber_g(sig);
            } catch (const std::exception& e) {
                row = FrontScanRow{};
                row.t = sig.t;
                row.error = e.what();
            }
            rows.push_back(row);
        }
        write_out(c_front.out_path, emit_csv(rows));
        return 0;
    }
    if (loc->parsed()) {
        const ParsedScenario p = load(c_loc);
        if (r_n < 1) throw DomainError("localization: need --n >= 1");
        std::vector<double> grid(r_n);
        for (int i = 0; i < r_n; ++i)
            grid[i] = (r_n == 1) ? r_from
                                 : r_from + (r_to - r_from) * i / (r_n - 1);
        LocalizationObservable obs;
        if (observable == "glauber") obs = LocalizationObservable::GlauberDensity;
        else if (observable == "nw") obs = LocalizationObservable::NewtonWignerDensity;
        else throw DomainError("localization: --observable must be glauber|nw");
        const DensityProfile prof =
            density_profile(obs, t_eval, grid, p.scenario, p.numerics);
        write_out(c_loc.out_path, emit_csv(prof));
        return 0;
    }
    if (scan->parsed()) {
        const ParsedScenario p = load(c_scan);
        const CausalityReport rep = causality_scan(p.scenario, p.numerics);
        write_out(c_scan.out_path, emit_csv(rep));
        return 0;
    }
    if (self->parsed()) return run_selftest();
    return 4;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const qdet::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const qdet::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const qdet::ConvergenceError& e) {
        std::cerr << "convergence error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
