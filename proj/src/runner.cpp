#include "thermolen/runner.hpp"
#include "thermolen/errors.hpp"
#include "thermolen/gaussian.hpp"
#include "thermolen/hyperbolic.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

namespace thermolen {

std::string format_double(double v) {
    char buf[40];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, p);
}

namespace {

struct PointEval {
    BoundReport report;
    double omega1 = 0.0;
    double tau = 0.0;
};

double column_value(Column c, const PointEval& e) {
    const BoundReport& r = e.report;
    auto need = [](const std::optional<double>& v, const char* what) {
        if (!v) throw NumericError(std::string("column ") + what + " was not computed");
        return *v;
    };
    switch (c) {
    case Column::QStar: return r.qstar;
    case Column::Omega1: return e.omega1;
    case Column::Tau: return e.tau;
    case Column::Sigma: return r.sigma;
    case Column::SBures: return r.s_bures;
    case Column::LeadingBures: return r.leading_bures;
    case Column::BuresDistanceSq: return r.bures_distance_sq;
    case Column::STrace: return need(r.s_trace, "s_trace");
    case Column::UpperEigenvalue: return need(r.upper_eigenvalue, "upper_eigenvalue");
    case Column::UpperPopulation: return need(r.upper_population, "upper_population");
    case Column::Fidelity: return r.fidelity;
    }
    throw NumericError("unknown column");
}

bool has_column(const std::vector<Column>& cols, Column c) {
    for (const Column x : cols) {
        if (x == c) return true;
    }
    return false;
}

// Per-point work, dispatched on the sweep variable. Pure function of
// (config, index), so points can run on any thread; results are committed
// into an index-addressed slot to keep output order deterministic.
PointEval eval_point(const RunConfig& cfg, const ReportOptions& opts, double value) {
    PointEval e;
    e.omega1 = cfg.params.omega1;
    e.tau = cfg.protocol.tau;
    if (!cfg.sweep) {
        e.report = report_for_protocol(cfg.params, cfg.protocol, opts);
        return e;
    }
    switch (cfg.sweep->variable) {
    case SweepVariable::QStar:
        e.report = report_for_qstar(cfg.params, value, opts);
        break;
    case SweepVariable::Omega1: {
        OscillatorParams p = cfg.params;
        p.omega1 = value;
        e.omega1 = value;
        e.report = report_for_protocol(p, cfg.protocol, opts);
        break;
    }
    case SweepVariable::Tau: {
        Protocol proto = cfg.protocol;
        proto.tau = value;
        e.tau = value;
        e.report = report_for_protocol(cfg.params, proto, opts);
        break;
    }
    }
    return e;
}

void validate_protocol_for_run(const RunConfig& cfg) {
    const bool qstar_sweep = cfg.sweep && cfg.sweep->variable == SweepVariable::QStar;
    if (qstar_sweep) return; // protocol never evaluated
    if (cfg.sweep && cfg.protocol.kind == ProtocolKind::Tabulated)
        throw ConfigError("tabulated protocols fix their endpoints and duration; "
                          "sweep them via explicit tables instead");
    try {
        static_cast<void>(FrequencySchedule(cfg.params, cfg.protocol));
    } catch (const Error& e) {
        throw ConfigError(std::string("invalid protocol: ") + e.what());
    }
}

} // namespace

RunResult run(const RunConfig& cfg, std::ostream& csv) {
    cfg.params.validate();
    const std::vector<Column> cols = plan_columns(cfg);
    validate_protocol_for_run(cfg);

    ReportOptions opts;
    opts.grid = cfg.grid;
    opts.with_trace = has_column(cols, Column::STrace);
    opts.with_upper =
        has_column(cols, Column::UpperEigenvalue) || has_column(cols, Column::UpperPopulation);

    std::vector<double> values;
    if (cfg.sweep) {
        const auto& sw = *cfg.sweep;
        values.resize(sw.steps);
        for (int i = 0; i < sw.steps; ++i)
            values[i] = sw.from + (sw.to - sw.from) * i / (sw.steps - 1);
    } else {
        values.resize(1);
    }

    std::vector<PointEval> evals(values.size());
    {
        std::atomic<std::size_t> next{0};
        std::atomic<bool> aborted{false};
        std::mutex mx;
        std::exception_ptr first_error;
        auto work = [&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= values.size() || aborted.load()) return;
                try {
                    evals[i] = eval_point(cfg, opts, values[i]);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(mx);
                    if (!first_error) first_error = std::current_exception();
                    aborted.store(true);
                    return;
                }
            }
        };
        const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
        const unsigned n_threads = static_cast<unsigned>(
            std::min<std::size_t>(hw, values.size()));
        if (n_threads <= 1) {
            work();
        } else {
            std::vector<std::thread> pool;
            pool.reserve(n_threads);
            for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(work);
            for (auto& th : pool) th.join();
        }
        if (first_error) std::rethrow_exception(first_error);
    }

    RunResult result;
    result.out_path = cfg.out_path;
    for (std::size_t c = 0; c < cols.size(); ++c)
        csv << (c ? "," : "") << column_name(cols[c]);
    csv << "\n";
    for (std::size_t i = 0; i < evals.size(); ++i) {
        std::string row;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (c) row += ',';
            row += format_double(column_value(cols[c], evals[i]));
        }
        csv << row << "\n";
        ++result.rows;
        for (const std::string& v : chain_violations(evals[i].report))
            result.violations.push_back("row " + std::to_string(i) + " (" + row + "): " + v);
        for (const std::string& w : upper_bound_breaches(evals[i].report))
            result.warnings.push_back("row " + std::to_string(i) + ": " + w);
        if (evals[i].report.s_trace && !evals[i].report.trace_grid_converged)
            result.warnings.push_back("row " + std::to_string(i) +
                                      ": trace distance not grid-converged (delta >= 1e-4)");
    }
    return result;
}

RunResult run_to_file(const RunConfig& cfg) {
    std::ofstream out(cfg.out_path);
    if (!out) throw ConfigError("cannot open output file '" + cfg.out_path + "'");
    RunResult r = run(cfg, out);
    out.flush();
    if (!out) throw ConfigError("failed writing output file '" + cfg.out_path + "'");
    return r;
}

CheckReport check_config(const RunConfig& cfg) {
    CheckReport rep;
    auto fail = [&rep](const std::string& msg) {
        rep.errors.push_back(msg);
        rep.ok = false;
    };

    try {
        cfg.params.validate();
    } catch (const Error& e) {
        fail(std::string("params: ") + e.what());
        return rep; // nothing else is checkable without params
    }
    try {
        plan_columns(cfg);
    } catch (const Error& e) {
        fail(e.what());
    }
    try {
        validate_protocol_for_run(cfg);
    } catch (const Error& e) {
        fail(e.what());
    }
    if (cfg.sweep) {
        if (cfg.sweep->steps < 2) fail("sweep.steps must be >= 2");
        if (cfg.sweep->from > cfg.sweep->to) fail("sweep.from must not exceed sweep.to");
    }

    if (cfg.grid.n_points < 64) fail("grid.n_points must be >= 64");
    if (!(cfg.grid.half_width_mult > 0.0)) fail("grid.half_width_mult must be positive");
    if (!rep.ok) return rep;

    // Grid adequacy from closed-form variances; no kernels are built.
    const double w_lo = std::min(cfg.params.omega0, cfg.params.omega1);
    const double w_hi = std::max(cfg.params.omega0, cfg.params.omega1);
    const double sigma_wide = std::sqrt(equilibrium_state(cfg.params, w_lo).var_xx);
    const double half_width = cfg.grid.half_width_mult * sigma_wide;
    const double dx = 2.0 * half_width / (cfg.grid.n_points - 1);
    const double ground_width = std::sqrt(cfg.params.hbar / (2.0 * cfg.params.mass * w_hi));

    if (num::coth(cfg.params.thermal_arg(w_lo)) - 1.0 < 1e-6)
        rep.warnings.push_back("deep quantum regime: grid half-width is set by the "
                               "ground-state width, not a thermal width");
    if (cfg.grid.half_width_mult < 6.0)
        rep.warnings.push_back("grid.half_width_mult below 6 risks boundary truncation");
    if (dx > ground_width / 4.0)
        rep.warnings.push_back("grid spacing is coarse relative to the ground-state width; "
                               "increase grid.n_points");
    if (cfg.grid.n_points < 301)
        rep.warnings.push_back("fewer than 301 grid points; kernel-based quantities lose "
                               "accuracy");
    return rep;
}

} // namespace thermolen
