#include "thermolen/gaussian.hpp"
#include "thermolen/errors.hpp"
#include "thermolen/hyperbolic.hpp"

#include <cmath>

namespace thermolen {

void GaussianState::validate() const {
    if (!(var_xx > 0.0) || !(var_pp > 0.0))
        throw InvalidStateError("variances must be strictly positive");
    const double floor = 0.25 * hbar * hbar;
    if (var_xx * var_pp - cov_xp * cov_xp < floor * (1.0 - 1e-12))
        throw InvalidStateError("covariance matrix below the Heisenberg floor");
}

GaussianState equilibrium_state(const OscillatorParams& params, double omega) {
    params.validate();
    if (!(omega > 0.0) || !std::isfinite(omega))
        throw InvalidParamsError("omega must be strictly positive and finite");
    const double ct = num::coth(params.thermal_arg(omega));
    GaussianState s;
    s.var_xx = params.hbar / (2.0 * params.mass * omega) * ct;
    s.var_pp = params.hbar * omega * params.mass / 2.0 * ct;
    s.cov_xp = 0.0;
    s.hbar = params.hbar;
    return s;
}

GaussianState nonequilibrium_state(const OscillatorParams& params, const Trajectory& traj) {
    params.validate();
    if (traj.size() == 0) throw DomainError("empty trajectory");
    if (traj.max_wronskian_defect() > 1e-9)
        throw DomainError("trajectory violates the Wronskian invariant");
    const double w0 = params.omega0;
    const double ct = num::coth(params.thermal_arg(w0));
    const double x = traj.x_end(), xd = traj.xdot_end();
    const double y = traj.y_end(), yd = traj.ydot_end();
    GaussianState s;
    s.var_xx = params.hbar / (2.0 * params.mass * w0) * (y * y + w0 * w0 * x * x) * ct;
    s.var_pp = params.hbar * params.mass / (2.0 * w0) * (yd * yd + w0 * w0 * xd * xd) * ct;
    s.cov_xp = params.hbar / (2.0 * w0) * (y * yd + w0 * w0 * x * xd) * ct;
    s.hbar = params.hbar;
    return s;
}

namespace {

// F = 2 / (sqrt(Delta + delta) - sqrt(delta)) rationalized to
// 2 (sqrt(Delta + delta) + sqrt(delta)) / Delta, which adds positives only.
// sqrt(Delta + delta) goes through hypot to dodge overflow of the squares.
double fidelity_from_determinants(double delta_det, double sqrt_small_det) {
    const double root = std::hypot(std::sqrt(delta_det), sqrt_small_det);
    double f = 2.0 * (root + sqrt_small_det) / delta_det;
    if (f > 1.0) {
        if (f > 1.0 + 1e-10) throw NumericError("fidelity exceeded 1 beyond rounding slack");
        f = 1.0;
    }
    return f;
}

} // namespace

double gaussian_fidelity(const GaussianState& s1, const GaussianState& s2) {
    if (s1.hbar != s2.hbar) throw InvalidStateError("states carry different hbar");
    for (const auto* s : {&s1, &s2}) {
        if (!(s->var_xx > 0.0) || !(s->var_pp > 0.0))
            throw InvalidStateError("variances must be strictly positive");
        if (s->det_a() < 1.0 - 1e-9)
            throw InvalidStateError("unphysical covariance matrix (det A < 1)");
    }
    const double hbar2 = s1.hbar * s1.hbar;
    const double delta_det = 4.0 / hbar2 *
                             ((s1.var_xx + s2.var_xx) * (s1.var_pp + s2.var_pp) -
                              (s1.cov_xp + s2.cov_xp) * (s1.cov_xp + s2.cov_xp));
    const double d1 = std::max(s1.det_a() - 1.0, 0.0);
    const double d2 = std::max(s2.det_a() - 1.0, 0.0);
    return fidelity_from_determinants(delta_det, std::sqrt(d1 * d2));
}

double closed_form_fidelity(const OscillatorParams& params, double qstar) {
    params.validate();
    if (qstar < 1.0 - 1e-9) throw DomainError("qstar must be >= 1");
    const double z0 = params.thermal_arg(params.omega0);
    const double z1 = params.thermal_arg(params.omega1);
    const double ct0 = num::coth(z0), ct1 = num::coth(z1);
    const double c0 = num::csch(z0), c1 = num::csch(z1);
    const double delta_det = ct0 * ct0 + ct1 * ct1 + 2.0 * qstar * ct0 * ct1;
    return fidelity_from_determinants(delta_det, c0 * c1);
}

} // namespace thermolen
