#include "thermolen/trajectory.hpp"
#include "thermolen/errors.hpp"

#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <array>
#include <cmath>

namespace thermolen {

namespace {

using State = std::array<double, 4>; // x, xdot, y, ydot

double qstar_formula(double omega0, double omega_ref, double x, double xdot, double y,
                     double ydot) {
    const double o0sq = omega0 * omega0;
    const double orsq = omega_ref * omega_ref;
    return (o0sq * (orsq * x * x + xdot * xdot) + (orsq * y * y + ydot * ydot)) /
           (2.0 * omega0 * omega_ref);
}

// The sudden protocol evolves under the constant final frequency, so the
// trajectory is plain trigonometry; no stiff step to integrate across.
Trajectory sudden_trajectory(const OscillatorParams& params, double tau) {
    Trajectory traj;
    if (tau <= 0.0) {
        traj.times = {0.0};
        traj.x = {0.0};
        traj.xdot = {1.0};
        traj.y = {1.0};
        traj.ydot = {0.0};
        return traj;
    }
    const double w = params.omega1;
    const double cycles = w * tau / (2.0 * M_PI);
    const std::size_t n = std::clamp<std::size_t>(static_cast<std::size_t>(64.0 * cycles), 65,
                                                  4097);
    traj.times.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = tau * static_cast<double>(i) / static_cast<double>(n - 1);
        const double c = std::cos(w * t), s = std::sin(w * t);
        traj.times.push_back(t);
        traj.x.push_back(s / w);
        traj.xdot.push_back(c);
        traj.y.push_back(c);
        traj.ydot.push_back(-w * s);
    }
    return traj;
}

} // namespace

double Trajectory::max_wronskian_defect() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < times.size(); ++i)
        worst = std::max(worst, std::abs(xdot[i] * y[i] - x[i] * ydot[i] - 1.0));
    return worst;
}

Trajectory integrate_trajectory(const OscillatorParams& params, const Protocol& protocol,
                                double tol) {
    if (!(tol > 1e-14 && tol < 1e-3))
        throw DomainError("integration tolerance must lie in (1e-14, 1e-3)");
    FrequencySchedule omega(params, protocol); // validates protocol
    if (protocol.kind == ProtocolKind::Sudden) return sudden_trajectory(params, protocol.tau);

    const double tau = omega.tau();
    Trajectory traj;
    auto push = [&traj](double t, const State& s) {
        traj.times.push_back(t);
        traj.x.push_back(s[0]);
        traj.xdot.push_back(s[1]);
        traj.y.push_back(s[2]);
        traj.ydot.push_back(s[3]);
    };

    State s{0.0, 1.0, 1.0, 0.0};
    push(0.0, s);
    if (tau == 0.0) return traj;

    auto system = [&omega](const State& u, State& dudt, double t) {
        const double w = omega(t);
        if (!std::isfinite(w)) throw InvalidProtocolError("non-finite frequency sample");
        const double w2 = w * w;
        dudt[0] = u[1];
        dudt[1] = -w2 * u[0];
        dudt[2] = u[3];
        dudt[3] = -w2 * u[2];
    };

    namespace ode = boost::numeric::odeint;
    auto stepper = ode::make_controlled(tol, tol, ode::runge_kutta_dopri5<State>());

    double t = 0.0;
    double dt = std::min(tau, 0.1 / std::max(params.omega0, params.omega1));
    const double t_floor = 1e-14 * tau;
    std::size_t steps = 0;
    while (tau - t > 1e-15 * tau) {
        if (dt > tau - t) dt = tau - t;
        if (ode::fail == stepper.try_step(system, s, t, dt)) {
            if (dt < t_floor) throw IntegrationError("step size underflow");
        } else {
            push(t, s);
        }
        if (++steps > 50'000'000) throw IntegrationError("step budget exhausted");
    }
    if (traj.times.back() != tau) traj.times.back() = tau; // snap the final ulp

    if (traj.max_wronskian_defect() > 1e-9)
        throw IntegrationError("Wronskian drifted beyond 1e-9; tolerance too loose");
    return traj;
}

double adiabaticity(const OscillatorParams& params, const Trajectory& traj) {
    params.validate();
    if (traj.size() == 0) throw DomainError("empty trajectory");
    if (traj.max_wronskian_defect() > 1e-9)
        throw DomainError("trajectory violates the Wronskian invariant");
    return qstar_formula(params.omega0, params.omega1, traj.x_end(), traj.xdot_end(),
                         traj.y_end(), traj.ydot_end());
}

double sudden_qstar(const OscillatorParams& params) {
    params.validate();
    return (params.omega0 * params.omega0 + params.omega1 * params.omega1) /
           (2.0 * params.omega0 * params.omega1);
}

double mean_energy_final(const OscillatorParams& params, double qstar) {
    params.validate();
    if (qstar < 1.0 - 1e-9) throw DomainError("qstar must be >= 1");
    return 0.5 * params.hbar * params.omega1 * qstar * num::coth(params.thermal_arg(params.omega0));
}

double ground_state_persistence(double qstar) {
    if (qstar < 1.0 - 1e-9) throw DomainError("qstar must be >= 1");
    return std::sqrt(2.0 / (1.0 + std::max(qstar, 1.0)));
}

std::vector<double> qstar_profile(const OscillatorParams& params, const Protocol& protocol,
                                  const Trajectory& traj) {
    FrequencySchedule omega(params, protocol);
    std::vector<double> out;
    out.reserve(traj.size());
    for (std::size_t i = 0; i < traj.size(); ++i)
        out.push_back(qstar_formula(params.omega0, omega(traj.times[i]), traj.x[i], traj.xdot[i],
                                    traj.y[i], traj.ydot[i]));
    return out;
}

} // namespace thermolen
