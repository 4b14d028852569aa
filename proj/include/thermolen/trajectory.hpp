#pragma once

#include "thermolen/params.hpp"
#include "thermolen/protocol.hpp"

#include <cstddef>
#include <vector>

namespace thermolen {

/// Sampled auxiliary classical solutions of u'' + omega(t)^2 u = 0.
/// x is the sine-like solution (x(0)=0, x'(0)=1), y the cosine-like one
/// (y(0)=1, y'(0)=0). Their Wronskian x'y - xy' stays 1 along the motion.
struct Trajectory {
    std::vector<double> times;
    std::vector<double> x, xdot;
    std::vector<double> y, ydot;

    std::size_t size() const { return times.size(); }
    double tau() const { return times.empty() ? 0.0 : times.back(); }

    double x_end() const { return x.back(); }
    double xdot_end() const { return xdot.back(); }
    double y_end() const { return y.back(); }
    double ydot_end() const { return ydot.back(); }

    /// max_t |x'y - xy' - 1| over the stored samples.
    double max_wronskian_defect() const;
};

/// Integrate the auxiliary equation over the protocol with an adaptive
/// embedded Runge-Kutta pair. tol is the relative (and absolute) local
/// error target, valid range (1e-14, 1e-3). Sudden protocols are handled
/// analytically.
Trajectory integrate_trajectory(const OscillatorParams& params, const Protocol& protocol,
                                double tol = 1e-10);

/// Husimi's adiabaticity measure Q* from the endpoint of a trajectory.
/// Q* = 1 for adiabatic driving and grows with the degree of nonadiabaticity.
double adiabaticity(const OscillatorParams& params, const Trajectory& traj);

/// Q* of the instantaneous quench: (omega0^2 + omega1^2) / (2 omega0 omega1).
double sudden_qstar(const OscillatorParams& params);

/// Final mean energy (hbar*omega1/2) * Q* * coth(beta*hbar*omega0/2).
double mean_energy_final(const OscillatorParams& params, double qstar);

/// Probability to remain in the ground state when driving starts there:
/// sqrt(2 / (1 + Q*)).
double ground_state_persistence(double qstar);

/// Q*(t) along the trajectory with omega1 replaced by omega(t). The
/// endpoint value equals adiabaticity(); intermediate values are a plotting
/// convenience, not an independently defined observable.
std::vector<double> qstar_profile(const OscillatorParams& params, const Protocol& protocol,
                                  const Trajectory& traj);

} // namespace thermolen
