// Acceptance gate: one self-contained check per release criterion, each
// printing a single PASS/FAIL line with the measured numbers and its
// runtime. Exit status is the number of failed criteria.
#include "thermolen/bounds.hpp"
#include "thermolen/errors.hpp"
#include "thermolen/gaussian.hpp"
#include "thermolen/kernel.hpp"
#include "thermolen/metrics.hpp"
#include "thermolen/trajectory.hpp"

#include "oracles.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace thermolen;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

OscillatorParams fig1_params() {
    OscillatorParams p;
    p.beta = 1.2;
    p.omega0 = 0.9;
    p.omega1 = 0.5;
    return p;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

// --- criterion 1: sigma >= s(2L/pi) >= (8/pi^2) L^2 on the figure grid ----
Outcome criterion1() {
    const OscillatorParams p = fig1_params();
    double worst1 = 0.0, worst2 = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double q = 1.0 + 4.0 * i / 199.0;
        const double sigma = sigma_exact(p, q);
        const LowerBounds lb = lower_bounds(closed_form_fidelity(p, q));
        worst1 = std::max(worst1, lb.s_bures - sigma);
        worst2 = std::max(worst2, lb.leading_bures - lb.s_bures);
    }
    Outcome o;
    o.pass = worst1 <= 1e-10 && worst2 <= 1e-10;
    o.detail = "max defects " + fmt(worst1) + " (sigma vs s), " + fmt(worst2) +
               " (s vs leading) on 200 points";
    return o;
}

// --- criterion 2: sigma >= D^2 on the same grid --------------------------
Outcome criterion2() {
    const OscillatorParams p = fig1_params();
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double q = 1.0 + 4.0 * i / 199.0;
        const double sigma = sigma_exact(p, q);
        const LowerBounds lb = lower_bounds(closed_form_fidelity(p, q));
        worst = std::max(worst, lb.bures_distance_sq - sigma);
    }
    Outcome o;
    o.pass = worst <= 1e-10;
    o.detail = "max defect " + fmt(worst);
    return o;
}

// --- criterion 3: covariance route == hyperbolic closed form -------------
Outcome criterion3() {
    std::mt19937 rng(20260825u);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    auto log_uniform = [&](double lo, double hi) {
        return lo * std::exp(uni(rng) * std::log(hi / lo));
    };
    double worst = 0.0;
    for (int draw = 0; draw < 100; ++draw) {
        OscillatorParams p;
        p.beta = log_uniform(0.05, 8.0);
        p.omega0 = log_uniform(0.3, 2.5);
        p.omega1 = log_uniform(0.3, 2.5);
        Protocol proto;
        switch (draw % 3) {
        case 0: proto = Protocol::sudden(3.0 * uni(rng)); break;
        case 1: proto = Protocol::linear(0.2 + 14.8 * uni(rng)); break;
        default: proto = Protocol::smoothstep(0.2 + 14.8 * uni(rng)); break;
        }
        const Trajectory traj = integrate_trajectory(p, proto, 1e-11);
        const double via_q = closed_form_fidelity(p, adiabaticity(p, traj));
        const double via_cov = gaussian_fidelity(nonequilibrium_state(p, traj),
                                                 equilibrium_state(p, p.omega1));
        worst = std::max(worst, oracles::rel_err(via_cov, via_q));
    }
    Outcome o;
    o.pass = worst < 1e-9;
    o.detail = "worst relative route difference " + fmt(worst) + " over 100 draws";
    return o;
}

// --- criterion 4: zero-temperature limit ----------------------------------
Outcome criterion4() {
    OscillatorParams p = fig1_params();
    p.beta = 200.0 / (p.hbar * p.omega0);
    double worst = 0.0;
    for (double q : {1.0, 2.0, 5.0, 10.0}) {
        const double f = closed_form_fidelity(p, q);
        worst = std::max(worst, std::abs(f - std::sqrt(2.0 / (1.0 + q))) / f);
    }
    Outcome o;
    o.pass = worst < 1e-3;
    o.detail = "worst relative deviation " + fmt(worst);
    return o;
}

// --- criterion 5: classical limit -----------------------------------------
Outcome criterion5() {
    OscillatorParams p = fig1_params();
    p.beta = 0.01 / (p.hbar * p.omega0);
    const double w0 = p.omega0, w1 = p.omega1;
    double worst = 0.0;
    for (double q : {1.0, 2.0, 5.0, 10.0}) {
        const double ref = 4.0 * w0 * w1 / (w0 * w0 + 2.0 * q * w0 * w1 + w1 * w1);
        worst = std::max(worst, oracles::rel_err(closed_form_fidelity(p, q), ref));
    }
    Outcome o;
    o.pass = worst < 1e-3;
    o.detail = "worst relative deviation " + fmt(worst);
    return o;
}

// --- criterion 6: discretized relative entropy vs closed form -------------

// Ramp with a tunable wiggle amplitude; larger amplitude pumps the
// oscillator harder, so Q* grows with a. Sampled into a dense table to
// exercise the tabulated-protocol path end to end.
Protocol wiggle_protocol(double amplitude) {
    constexpr double tau = 30.0;
    constexpr int n = 1201;
    std::vector<std::pair<double, double>> table(n);
    for (int i = 0; i < n; ++i) {
        const double s = static_cast<double>(i) / (n - 1);
        const double env = std::sin(M_PI * s);
        const double w = 0.9 - 0.4 * s + amplitude * std::sin(14.0 * M_PI * s) * env * env;
        table[i] = {tau * s, w};
    }
    table.front().second = 0.9;
    table.back().second = 0.5;
    return Protocol::tabulated(std::move(table));
}

double wiggle_qstar(const OscillatorParams& p, double amplitude) {
    const Trajectory traj = integrate_trajectory(p, wiggle_protocol(amplitude), 1e-10);
    return adiabaticity(p, traj);
}

double find_wiggle_amplitude(const OscillatorParams& p, double target) {
    double lo = 0.0, hi = 0.12;
    while (wiggle_qstar(p, hi) < target) {
        hi *= 1.5;
        if (hi > 2.0) throw NumericError("wiggle bracket expansion failed");
    }
    for (int it = 0; it < 40 && hi - lo > 1e-9; ++it) {
        const double mid = 0.5 * (lo + hi);
        (wiggle_qstar(p, mid) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

Outcome criterion6() {
    const OscillatorParams p = fig1_params();
    std::ostringstream detail;
    bool pass = true;

    auto compare = [&](const Protocol& proto, const char* label) {
        const Trajectory traj = integrate_trajectory(p, proto, 1e-10);
        const double q = adiabaticity(p, traj);
        const GaussianState states[] = {nonequilibrium_state(p, traj),
                                        equilibrium_state(p, p.omega1)};
        const PositionGrid grid = make_grid(GridSpec{601, 8.0}, states);
        const RelativeEntropyResult num = sigma_numeric(
            kernel_nonequilibrium(p, traj, grid), kernel_equilibrium(p, p.omega1, grid));
        const double ref = sigma_exact(p, q);
        const double err = oracles::rel_err(num.value, ref);
        if (err >= 0.01) pass = false;
        detail << label << " Q*=" << fmt(q) << " err=" << fmt(err) << "; ";
    };

    compare(Protocol::sudden(0.0), "sudden");
    for (double target : {1.2, 2.0, 4.0}) {
        const double a = find_wiggle_amplitude(p, target);
        const double q = wiggle_qstar(p, a);
        if (std::abs(q - target) > 1e-3) {
            pass = false;
            detail << "ramp tuning missed Q*=" << target << " (got " << q << "); ";
            continue;
        }
        compare(wiggle_protocol(a), "ramp");
    }

    Outcome o;
    o.pass = pass;
    o.detail = detail.str();
    return o;
}

// --- criterion 7: trace-distance bound across the frequency sweep ---------
Outcome criterion7() {
    OscillatorParams p;
    p.beta = 4.8;
    p.omega0 = 0.9;
    const Trajectory traj = [&] {
        OscillatorParams q = p;
        q.omega1 = 0.3;
        return integrate_trajectory(q, Protocol::sudden(0.0));
    }();
    double worst_upper = 0.0, worst_lower = 0.0;
    int unconverged = 0;
    for (int i = 0; i < 25; ++i) {
        p.omega1 = 0.3 + 0.6 * i / 24.0;
        const TraceDistanceResult t = trace_distance_refined(p, traj, GridSpec{601, 8.0});
        if (!t.grid_converged) ++unconverged;
        const double q = sudden_qstar(p);
        const double sigma = sigma_exact(p, q);
        const LowerBounds lb = lower_bounds(closed_form_fidelity(p, q));
        const double s_trace = s_exact(t.value);
        worst_upper = std::max(worst_upper, s_trace - sigma);
        worst_lower = std::max(worst_lower, lb.s_bures - s_trace);
    }
    Outcome o;
    o.pass = worst_upper <= 1e-9 && worst_lower <= 1e-9 && unconverged == 0;
    o.detail = "max s(T)-sigma " + fmt(worst_upper) + ", max s(2L/pi)-s(T) " +
               fmt(worst_lower) + ", " + std::to_string(unconverged) + " unconverged grids";
    return o;
}

// --- criterion 8: Wronskian conservation and Q* >= 1 ----------------------
Outcome criterion8() {
    std::mt19937 rng(987654321u);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    auto log_uniform = [&](double lo, double hi) {
        return lo * std::exp(uni(rng) * std::log(hi / lo));
    };
    double worst_wronskian = 0.0, worst_q = 10.0;
    for (int draw = 0; draw < 1000; ++draw) {
        OscillatorParams p;
        p.omega0 = log_uniform(0.3, 2.5);
        p.omega1 = log_uniform(0.3, 2.5);
        const double tau = log_uniform(0.05, 10.0);
        Protocol proto;
        switch (draw % 3) {
        case 0: proto = Protocol::linear(tau); break;
        case 1: proto = Protocol::smoothstep(tau); break;
        default: {
            // Smooth random wiggle sampled into a table.
            const int k = 1 + static_cast<int>(4.0 * uni(rng));
            const double amp = 0.3 * std::min(p.omega0, p.omega1) * uni(rng);
            const double phase = 2.0 * M_PI * uni(rng);
            std::vector<std::pair<double, double>> table(101);
            for (int i = 0; i <= 100; ++i) {
                const double s = i / 100.0;
                const double env = std::sin(M_PI * s);
                table[i] = {tau * s, p.omega0 + (p.omega1 - p.omega0) * s +
                                         amp * std::sin(2.0 * M_PI * k * s + phase) * env * env};
            }
            table.front().second = p.omega0;
            table.back().second = p.omega1;
            proto = Protocol::tabulated(std::move(table));
            break;
        }
        }
        const Trajectory traj = integrate_trajectory(p, proto, 1e-11);
        worst_wronskian = std::max(worst_wronskian, traj.max_wronskian_defect());
        worst_q = std::min(worst_q, adiabaticity(p, traj));
    }
    Outcome o;
    o.pass = worst_wronskian < 1e-9 && worst_q >= 1.0 - 1e-9;
    o.detail = "max Wronskian defect " + fmt(worst_wronskian) + ", min Q*-1 " +
               fmt(worst_q - 1.0) + " over 1000 protocols";
    return o;
}

// --- criterion 9: s(x) calibration ----------------------------------------
Outcome criterion9() {
    bool pass = true;
    std::ostringstream detail;
    for (double x : {1e-2, 1e-3}) {
        const double ratio = (s_exact(x) - 2.0 * x * x) / (x * x * x * x);
        detail << "ratio(" << fmt(x) << ")=" << ratio << " ";
        if (std::abs(ratio - 4.0 / 9.0) > 1e-3) pass = false;
    }
    double worst = -1.0;
    for (int i = 0; i <= 10000; ++i) {
        const double x = 0.95 * i / 10000.0;
        worst = std::max(worst, s_series(x, 5) - s_exact(x));
    }
    detail << "max series excess " << fmt(worst);
    if (worst > 1e-14) pass = false;
    Outcome o;
    o.pass = pass;
    o.detail = detail.str();
    return o;
}

// --- criterion 10: spectrum invariance of the discretized state -----------
Outcome criterion10() {
    const OscillatorParams p = fig1_params();
    const Trajectory traj = integrate_trajectory(p, Protocol::sudden(0.0));
    const DiscretizedKernel k = kernel_nonequilibrium(p, traj, GridSpec{601, 8.0});
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(k.grid.dx * k.matrix,
                                                           Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) return {false, "eigensolver failed"};
    std::vector<double> lam(solver.eigenvalues().data(),
                            solver.eigenvalues().data() + solver.eigenvalues().size());
    std::sort(lam.begin(), lam.end(), std::greater<double>());
    const std::vector<double> w = oracles::boltzmann_weights(p, p.omega0, 10);
    double worst = 0.0;
    for (int n = 0; n < 10; ++n) worst = std::max(worst, std::abs(lam[n] - w[n]));
    Outcome o;
    o.pass = worst < 1e-6;
    o.detail = "max |eigenvalue - thermal weight| " + fmt(worst) + " over the top 10";
    return o;
}

// --- criterion 11: spectral upper bound readings ---------------------------
Outcome criterion11() {
    const OscillatorParams p = fig1_params();
    bool pass = true;
    std::ostringstream detail;

    const double closed = upper_bound_spectral(p, SpectralMode::Eigenvalue);
    const double summed = oracles::upper_bound_partial_sum(p, 10000);
    if (oracles::rel_err(closed, summed) > 1e-10) {
        pass = false;
        detail << "closed form vs partial sum differ by " << fmt(oracles::rel_err(closed, summed))
               << "; ";
    }

    OscillatorParams div = p;
    div.omega0 = 0.4;
    div.omega1 = 0.9;
    if (!std::isinf(upper_bound_spectral(div, SpectralMode::Eigenvalue))) {
        pass = false;
        detail << "missing divergence for 2 omega0 <= omega1; ";
    }

    ReportOptions opts;
    opts.with_upper = true;
    const BoundReport rep = report_for_protocol(p, Protocol::sudden(0.0), opts);
    if (!rep.upper_population || !std::isfinite(*rep.upper_population)) {
        pass = false;
        detail << "population reading missing; ";
    } else {
        // Rebuild the truncated sum from the same population vector the
        // library quadrature produces, tail included, and compare.
        const Trajectory traj = integrate_trajectory(p, Protocol::sudden(0.0));
        const GaussianState states[] = {nonequilibrium_state(p, traj),
                                        equilibrium_state(p, p.omega1)};
        const PositionGrid grid = make_grid(GridSpec{601, 8.0}, states);
        const DiscretizedKernel k = kernel_nonequilibrium(p, traj, grid);
        const double xi_l = std::sqrt(p.mass * p.omega1 / p.hbar) * grid.half_width;
        const int n_fit = static_cast<int>(0.5 * ((xi_l - 4.0) * (xi_l - 4.0) - 1.0));
        const int n_max = std::min({100, grid.n() / 6, 200, n_fit});
        const std::vector<double> pops = fock_populations(k, p, p.omega1, n_max);
        const double b = std::exp(-p.beta * p.hbar * p.omega1);
        double sum = 0.0, weight = 1.0 - b, term_prev = 0.0, term_last = 0.0;
        for (std::size_t n = 0; n < pops.size(); ++n, weight *= b) {
            if (pops[n] <= 1e-13) continue;
            const double term = pops[n] * pops[n] / weight;
            sum += term;
            term_prev = term_last;
            term_last = term;
        }
        const double ratio = term_last / term_prev;
        const double recomputed = sum + term_last * ratio / (1.0 - ratio) - 1.0;
        if (oracles::rel_err(*rep.upper_population, recomputed) > 1e-9) {
            pass = false;
            detail << "population reading " << *rep.upper_population
                   << " != recomputed " << recomputed << "; ";
        }
        if (rep.sigma <= *rep.upper_population + 1e-3) {
            detail << "sigma " << fmt(rep.sigma) << " <= population bound "
                   << fmt(*rep.upper_population) << " (inequality holds); ";
        } else {
            detail << "population bound " << fmt(*rep.upper_population)
                   << " falls below sigma " << fmt(rep.sigma)
                   << " (violation reported, see release notes); ";
        }
        if (rep.upper_eigenvalue && *rep.upper_eigenvalue < rep.sigma)
            detail << "eigenvalue reading " << fmt(*rep.upper_eigenvalue)
                   << " below sigma as expected for the quench";
    }

    Outcome o;
    o.pass = pass;
    o.detail = detail.str();
    return o;
}

struct Criterion {
    const char* name;
    std::function<Outcome()> body;
    double budget_seconds; // 0 = untimed
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"C1  inequality chain on the Fig-1-style grid", criterion1, 1.0},
        {"C2  Bures-distance bound", criterion2, 0.0},
        {"C3  fidelity route equivalence", criterion3, 5.0},
        {"C4  zero-temperature limit", criterion4, 0.0},
        {"C5  classical limit", criterion5, 0.0},
        {"C6  relative-entropy oracle", criterion6, 60.0},
        {"C7  trace-distance comparison", criterion7, 120.0},
        {"C8  Wronskian and adiabaticity floor", criterion8, 30.0},
        {"C9  s(x) calibration", criterion9, 0.0},
        {"C10 spectrum invariance", criterion10, 0.0},
        {"C11 spectral upper bound", criterion11, 0.0},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_seconds > 0.0 && secs > c.budget_seconds) {
            o.pass = false;
            o.detail += " [exceeded " + fmt(c.budget_seconds) + " s budget]";
        }
        std::printf("%s %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str(),
                    secs);
        if (!o.pass) ++failures;
    }
    std::printf("%d/11 criteria passed\n", 11 - failures);
    return failures;
}
