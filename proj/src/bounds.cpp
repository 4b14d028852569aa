#include "thermolen/bounds.hpp"
#include "thermolen/errors.hpp"
#include "thermolen/gaussian.hpp"
#include "thermolen/hyperbolic.hpp"
#include "thermolen/trajectory.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace thermolen {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Objective of Eq.-(8)-type minimization; strictly convex on (x, 1).
double s_objective(double x, double r) {
    return (1.0 - r + x) * std::log1p(x / (1.0 - r)) + (r - x) * std::log1p(-x / r);
}

double checked_x(double x) {
    if (x < 0.0) {
        if (x < -1e-12) throw DomainError("s(x) needs x in [0, 1)");
        return 0.0;
    }
    if (x > 1.0 + 1e-10) throw DomainError("s(x) needs x in [0, 1)");
    return x;
}

} // namespace

double s_exact(double x) {
    x = checked_x(x);
    if (x == 0.0) return 0.0;
    if (x >= 1.0 - 1e-12) return kInf;

    // Coarse scan seeds the bracket; the objective is convex, so the best
    // sample's neighbors enclose the minimizer.
    constexpr int kScan = 1024;
    constexpr double kEps = 1e-13;
    const double lo = x + kEps, hi = 1.0 - kEps;
    const double step = (hi - lo) / (kScan - 1);
    int best = 0;
    double best_val = kInf;
    for (int i = 0; i < kScan; ++i) {
        const double v = s_objective(x, lo + step * i);
        if (v < best_val) {
            best_val = v;
            best = i;
        }
    }
    double a = lo + step * std::max(best - 1, 0);
    double b = lo + step * std::min(best + 1, kScan - 1);

    constexpr double kGolden = 0.6180339887498949; // (sqrt(5)-1)/2
    double c = b - kGolden * (b - a);
    double d = a + kGolden * (b - a);
    double fc = s_objective(x, c), fd = s_objective(x, d);
    while (b - a > 1e-12) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kGolden * (b - a);
            fc = s_objective(x, c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kGolden * (b - a);
            fd = s_objective(x, d);
        }
    }
    return s_objective(x, 0.5 * (a + b));
}

double s_series(double x, int n_terms) {
    x = checked_x(x);
    if (n_terms < 1 || n_terms > 5) throw DomainError("n_terms must lie in [1, 5]");
    static constexpr double kCoeff[5] = {2.0, 4.0 / 9.0, 32.0 / 135.0, 992.0 / 5103.0,
                                         6656.0 / 32805.0};
    const double x2 = x * x;
    double sum = 0.0, pow = 1.0;
    for (int k = 0; k < n_terms; ++k) {
        pow *= x2;
        sum += kCoeff[k] * pow;
    }
    return sum;
}

double sigma_exact(const OscillatorParams& params, double qstar) {
    params.validate();
    if (qstar < 1.0 - 1e-9) throw DomainError("qstar must be >= 1");
    const double z0 = params.thermal_arg(params.omega0);
    const double z1 = params.thermal_arg(params.omega1);
    const double work_term = 0.5 * params.beta * params.hbar *
                             (qstar * params.omega1 - params.omega0) * num::coth(z0);
    return work_term - (num::log_sinh(z1) - num::log_sinh(z0));
}

WorkDecomposition work_decomposition(const OscillatorParams& params, double qstar) {
    params.validate();
    if (qstar < 1.0 - 1e-9) throw DomainError("qstar must be >= 1");
    const double z0 = params.thermal_arg(params.omega0);
    const double z1 = params.thermal_arg(params.omega1);
    WorkDecomposition w;
    w.mean_work = mean_energy_final(params, qstar) -
                  0.5 * params.hbar * params.omega0 * num::coth(z0);
    w.delta_f = (num::log_sinh(z1) - num::log_sinh(z0)) / params.beta;
    w.sigma = params.beta * (w.mean_work - w.delta_f);
    return w;
}

RelativeEntropyResult sigma_numeric(const DiscretizedKernel& k_noneq,
                                    const DiscretizedKernel& k_eq) {
    require_shared_grid(k_noneq, k_eq);
    require_density_like(k_noneq);
    require_density_like(k_eq);
    const double dx = k_noneq.grid.dx;
    constexpr double kFloor = 1e-14;

    Eigen::MatrixXcd a = dx * k_noneq.matrix;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> sa(a, Eigen::EigenvaluesOnly);
    if (sa.info() != Eigen::Success) throw NumericError("eigensolver failed on the state kernel");

    RelativeEntropyResult r;
    double tr_rho_ln_rho = 0.0;
    for (Eigen::Index i = 0; i < sa.eigenvalues().size(); ++i) {
        const double lam = sa.eigenvalues()[i];
        if (lam < -1e-8)
            throw NumericError("state kernel has a negative eigenvalue beyond -1e-8");
        if (lam < kFloor) {
            r.excluded_mass_state += std::abs(lam);
        } else {
            tr_rho_ln_rho += lam * std::log(lam);
        }
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> sb(dx * k_eq.matrix);
    if (sb.info() != Eigen::Success)
        throw NumericError("eigensolver failed on the reference kernel");
    // tr(rho ln rho_ref) through the reference eigenbasis: sum_j ln(mu_j) <v_j|rho|v_j>.
    const Eigen::MatrixXcd av = a.selfadjointView<Eigen::Lower>() * sb.eigenvectors();
    double tr_rho_ln_ref = 0.0;
    for (Eigen::Index j = 0; j < sb.eigenvalues().size(); ++j) {
        const double mu = sb.eigenvalues()[j];
        const double proj = sb.eigenvectors().col(j).dot(av.col(j)).real();
        if (mu < -1e-8)
            throw NumericError("reference kernel has a negative eigenvalue beyond -1e-8");
        if (mu < kFloor) {
            r.excluded_mass_reference += std::abs(proj);
        } else {
            tr_rho_ln_ref += proj * std::log(mu);
        }
    }

    r.value = tr_rho_ln_rho - tr_rho_ln_ref;
    return r;
}

LowerBounds lower_bounds(double fidelity, std::optional<double> trace_dist) {
    const double angle = bures_angle(fidelity);
    LowerBounds b;
    b.s_bures = s_exact(2.0 * angle / M_PI);
    b.leading_bures = 8.0 / (M_PI * M_PI) * angle * angle;
    b.bures_distance_sq = 2.0 * (1.0 - std::sqrt(std::clamp(fidelity, 0.0, 1.0)));
    if (trace_dist) b.s_trace = s_exact(*trace_dist);
    return b;
}

ClassicalBound classical_lower_bound(double ell, ClassicalConvention convention) {
    if (ell < -1e-10 || ell > M_PI / 2.0 + 1e-10)
        throw DomainError("classical length must lie in [0, pi/2]");
    ell = std::clamp(ell, 0.0, M_PI / 2.0);
    ClassicalBound b;
    if (convention == ClassicalConvention::QuantumConsistent) {
        b.s_value = s_exact(2.0 * ell / M_PI);
        b.leading = 8.0 / (M_PI * M_PI) * ell * ell;
    } else {
        b.s_value = s_exact(ell / (2.0 * M_PI));
        b.leading = 2.0 / (M_PI * M_PI) * ell * ell;
    }
    return b;
}

double upper_bound_spectral(const OscillatorParams& params, SpectralMode mode,
                            std::span<const double> populations) {
    params.validate();
    const double bh = params.beta * params.hbar;
    const double b1 = std::exp(-bh * params.omega1);

    if (mode == SpectralMode::Eigenvalue) {
        if (2.0 * params.omega0 <= params.omega1) return kInf;
        const double one_minus_a = -std::expm1(-bh * params.omega0);
        const double one_minus_b = -std::expm1(-bh * params.omega1);
        const double one_minus_a2b = -std::expm1(-bh * (2.0 * params.omega0 - params.omega1));
        return one_minus_a * one_minus_a / (one_minus_b * one_minus_a2b) - 1.0;
    }

    if (populations.empty())
        throw DomainError("population mode needs a population vector");
    double total = 0.0;
    for (double p : populations) {
        if (p < -1e-12) throw DomainError("negative population");
        total += std::max(p, 0.0);
    }
    if (total > 1.0 + 1e-6) throw DomainError("populations sum beyond 1 + 1e-6");

    // Quadrature noise in high-n populations would otherwise dominate the
    // p_n^2/q_n terms; cut at the last population above the noise floor and
    // extend with a geometric tail fitted to the last two significant terms.
    // (States of definite parity populate every other level, so the ratio is
    // taken on the lattice of significant indices, not unit steps.)
    constexpr double kNoise = 1e-13;
    std::size_t n_star = 0;
    bool any = false;
    for (std::size_t n = 0; n < populations.size(); ++n)
        if (populations[n] > kNoise) {
            n_star = n;
            any = true;
        }
    if (!any) throw DomainError("all populations at quadrature noise level");

    const double one_minus_b = -std::expm1(-bh * params.omega1);
    double sum = 0.0;
    double term_a = 0.0, term_b = 0.0; // last two significant terms
    double weight = one_minus_b;
    for (std::size_t n = 0; n <= n_star; ++n, weight *= b1) {
        const double p = std::max(populations[n], 0.0);
        if (p == 0.0) continue;
        if (weight <= 0.0) return kInf; // support beyond the reference's reach
        const double term = p * p / weight;
        sum += term;
        if (p > kNoise) {
            term_a = term_b;
            term_b = term;
        }
    }
    if (n_star + 1 < populations.size() || term_a <= 0.0) {
        // Populations died out inside the window (or a single level holds
        // all the mass): the truncated sum is already converged.
        return sum - 1.0;
    }
    const double ratio = term_b / term_a;
    if (ratio >= 1.0) return kInf;
    return sum + term_b * ratio / (1.0 - ratio) - 1.0;
}

BoundReport report_for_qstar(const OscillatorParams& params, double qstar,
                             const ReportOptions& opts) {
    params.validate();
    BoundReport rep;
    rep.qstar = qstar;
    rep.fidelity = closed_form_fidelity(params, qstar);
    rep.sigma = sigma_exact(params, qstar);
    rep.bures_angle = bures_angle(rep.fidelity);
    const LowerBounds lb = lower_bounds(rep.fidelity);
    rep.s_bures = lb.s_bures;
    rep.leading_bures = lb.leading_bures;
    rep.bures_distance_sq = lb.bures_distance_sq;
    if (opts.with_upper)
        rep.upper_eigenvalue = upper_bound_spectral(params, SpectralMode::Eigenvalue);
    return rep;
}

BoundReport report_for_protocol(const OscillatorParams& params, const Protocol& protocol,
                                const ReportOptions& opts) {
    const Trajectory traj = integrate_trajectory(params, protocol, opts.tol);
    BoundReport rep = report_for_qstar(params, adiabaticity(params, traj), opts);

    if (opts.with_trace) {
        const TraceDistanceResult t = trace_distance_refined(params, traj, opts.grid);
        rep.trace_distance = t.value;
        rep.trace_grid_converged = t.grid_converged;
        rep.s_trace = s_exact(t.value);
    }
    if (opts.with_upper) {
        const GaussianState states[] = {nonequilibrium_state(params, traj),
                                        equilibrium_state(params, params.omega1)};
        const PositionGrid grid = make_grid(opts.grid, states);
        const DiscretizedKernel k = kernel_nonequilibrium(params, traj, grid);
        // Keep only eigenfunctions whose turning point sqrt(2n+1) (in units
        // of the omega1 oscillator length) sits at least 4 of those units
        // inside the grid; higher ones lose mass past the boundary and fail
        // the quadrature self-norm gate.
        const double xi_l =
            std::sqrt(params.mass * params.omega1 / params.hbar) * grid.half_width;
        const int n_fit =
            xi_l > 5.0 ? static_cast<int>(0.5 * ((xi_l - 4.0) * (xi_l - 4.0) - 1.0)) : 0;
        const int n_max = std::min({opts.population_n_max, grid.n() / 6, 200, n_fit});
        const std::vector<double> pops = fock_populations(k, params, params.omega1, n_max);
        rep.upper_population = upper_bound_spectral(params, SpectralMode::Population, pops);
    }
    return rep;
}

std::vector<std::string> chain_violations(const BoundReport& rep) {
    std::vector<std::string> out;
    auto check = [&out](double lhs, double rhs, double slack, const char* what) {
        if (lhs + slack < rhs) {
            std::ostringstream os;
            os << what << " violated: " << lhs << " < " << rhs;
            out.push_back(os.str());
        }
    };
    check(rep.sigma, rep.s_bures, 1e-10, "sigma >= s(2L/pi)");
    check(rep.s_bures, rep.leading_bures, 1e-10, "s(2L/pi) >= (8/pi^2) L^2");
    check(rep.leading_bures, 0.0, 1e-10, "(8/pi^2) L^2 >= 0");
    check(rep.sigma, rep.bures_distance_sq, 1e-10, "sigma >= D^2");
    if (rep.s_trace) check(rep.sigma, *rep.s_trace, 1e-8, "sigma >= s(T)");
    return out;
}

std::vector<std::string> upper_bound_breaches(const BoundReport& rep) {
    std::vector<std::string> out;
    auto check = [&](const std::optional<double>& ub, const char* mode) {
        if (ub && std::isfinite(*ub) && *ub + 1e-4 < rep.sigma) {
            std::ostringstream os;
            os << "upper bound (" << mode << " mode) " << *ub << " below sigma " << rep.sigma;
            out.push_back(os.str());
        }
    };
    check(rep.upper_eigenvalue, "eigenvalue");
    check(rep.upper_population, "population");
    return out;
}

} // namespace thermolen
