#pragma once

#include "thermolen/params.hpp"
#include "thermolen/trajectory.hpp"

namespace thermolen {

/// Single-mode Gaussian state: first moments plus covariance matrix.
/// hbar is carried along so the Heisenberg floor is checkable without
/// external context.
struct GaussianState {
    double mean_x = 0.0;
    double mean_p = 0.0;
    double var_xx = 0.0; ///< <x^2> - <x>^2
    double var_pp = 0.0; ///< <p^2> - <p>^2
    double cov_xp = 0.0; ///< (1/2)<xp+px> - <x><p>
    double hbar = 1.0;

    /// Determinant of the dimensionless covariance matrix
    /// (a_xx a_pp - a_xp^2 with a_xx = 2 var_xx, a_pp = 2 var_pp / hbar^2,
    /// a_xp = 2 cov_xp / hbar). Physical states have det_a >= 1.
    double det_a() const {
        return 4.0 * (var_xx * var_pp - cov_xp * cov_xp) / (hbar * hbar);
    }

    /// Throws InvalidStateError if variances are non-positive or the
    /// covariance dips below the Heisenberg floor (1e-12 relative slack).
    void validate() const;
};

/// Thermal state of the oscillator at frequency omega.
GaussianState equilibrium_state(const OscillatorParams& params, double omega);

/// State at the end of the drive, from the trajectory endpoint. Means vanish;
/// variances scale the initial thermal ones through the classical solutions.
GaussianState nonequilibrium_state(const OscillatorParams& params, const Trajectory& traj);

/// Uhlmann fidelity of two non-displaced single-mode Gaussian states,
/// evaluated in a cancellation-free rationalized form.
double gaussian_fidelity(const GaussianState& s1, const GaussianState& s2);

/// Fidelity between the driven state and the final equilibrium state as a
/// function of Q* alone (closed form in hyperbolic functions).
double closed_form_fidelity(const OscillatorParams& params, double qstar);

} // namespace thermolen
