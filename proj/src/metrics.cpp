#include "thermolen/metrics.hpp"
#include "thermolen/errors.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace thermolen {

namespace {

double checked_fidelity(double f) {
    if (f < 0.0) {
        if (f < -1e-10) throw DomainError("fidelity outside [0, 1]");
        return 0.0;
    }
    if (f > 1.0) {
        if (f > 1.0 + 1e-10) throw DomainError("fidelity outside [0, 1]");
        return 1.0;
    }
    return f;
}

} // namespace

double bures_angle(double fidelity) { return std::acos(std::sqrt(checked_fidelity(fidelity))); }

double bures_distance(double fidelity) {
    return std::sqrt(2.0 * (1.0 - std::sqrt(checked_fidelity(fidelity))));
}

HellingerResult hellinger_distance(const DiscretizedDensity& p1, const DiscretizedDensity& p2) {
    if (p1.p.size() != p2.p.size() || p1.dx != p2.dx)
        throw ShapeError("densities live on different grids");
    if (p1.p.empty() || !(p1.dx > 0.0)) throw ShapeError("empty density");
    double f = 0.0;
    for (std::size_t k = 0; k < 2; ++k) {
        const auto& p = k == 0 ? p1.p : p2.p;
        double mass = 0.0;
        for (double v : p) {
            if (v < -1e-12) throw DomainError("density has negative entries");
            mass += std::max(v, 0.0);
        }
        if (std::abs(mass * p1.dx - 1.0) > 1e-8)
            throw DomainError("density not normalized to 1 within 1e-8");
    }
    for (std::size_t i = 0; i < p1.p.size(); ++i)
        f += std::sqrt(std::max(p1.p[i], 0.0) * std::max(p2.p[i], 0.0));
    f = std::min(f * p1.dx, 1.0);
    HellingerResult r;
    r.fidelity = f;
    r.distance = std::sqrt(std::max(2.0 - 2.0 * f, 0.0));
    r.length = std::acos(f);
    return r;
}

double trace_distance(const DiscretizedKernel& k1, const DiscretizedKernel& k2) {
    require_shared_grid(k1, k2);
    require_density_like(k1);
    require_density_like(k2);
    Eigen::MatrixXcd diff = k1.grid.dx * (k1.matrix - k2.matrix);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(diff, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw NumericError("eigensolver failed to converge");
    Eigen::VectorXd lam = solver.eigenvalues().cwiseAbs();
    std::sort(lam.data(), lam.data() + lam.size(), std::greater<double>());
    double sum = 0.0;
    for (Eigen::Index i = 0; i < lam.size(); ++i) sum += lam[i];
    const double t = 0.5 * sum;
    if (t > 1.0 + 1e-6) throw NumericError("trace distance exceeded 1 beyond grid noise");
    return std::min(t, 1.0);
}

TraceDistanceResult trace_distance_refined(const OscillatorParams& params,
                                           const Trajectory& traj, const GridSpec& spec) {
    const GaussianState states[] = {nonequilibrium_state(params, traj),
                                    equilibrium_state(params, params.omega1)};
    auto eval = [&](const GridSpec& s) {
        const PositionGrid grid = make_grid(s, states);
        return trace_distance(kernel_nonequilibrium(params, traj, grid),
                              kernel_equilibrium(params, params.omega1, grid));
    };
    // 2n-1 points halve dx exactly while keeping the same endpoints.
    GridSpec fine = spec;
    fine.n_points = 2 * spec.n_points - 1;
    TraceDistanceResult r;
    r.value = eval(spec);
    r.refined_value = eval(fine);
    r.refinement_delta = std::abs(r.refined_value - r.value);
    r.grid_converged = r.refinement_delta < 1e-4;
    return r;
}

MetricReport metric_report(double fidelity, std::optional<double> trace) {
    MetricReport m;
    m.fidelity = checked_fidelity(fidelity);
    m.bures_angle = bures_angle(m.fidelity);
    m.bures_distance = bures_distance(m.fidelity);
    if (trace) {
        if (*trace < -1e-10 || *trace > 1.0 + 1e-6)
            throw DomainError("trace distance outside [0, 1]");
        m.trace_distance = std::clamp(*trace, 0.0, 1.0);
    }
    m.norm_bures_angle = M_PI / 2.0;
    m.norm_bures_distance = std::sqrt(2.0);
    m.norm_trace_distance = 1.0;
    return m;
}

} // namespace thermolen
