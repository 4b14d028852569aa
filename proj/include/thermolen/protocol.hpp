#pragma once

#include "thermolen/params.hpp"

#include <utility>
#include <vector>

namespace thermolen {

enum class ProtocolKind { Sudden, Linear, Smoothstep, Tabulated };

/// Frequency schedule omega(t) on [0, tau]. Endpoints must match the
/// parameter set it is used with: omega(0) = omega0, omega(tau) = omega1
/// (for Sudden, omega jumps to omega1 at t = 0+ and tau = 0 is allowed).
struct Protocol {
    ProtocolKind kind = ProtocolKind::Sudden;
    double tau = 0.0;
    std::vector<std::pair<double, double>> table; ///< (t, omega) samples, Tabulated only
    bool linear_interp = false;                   ///< Tabulated: opt in to linear interpolation

    static Protocol sudden(double tau = 0.0) { return {ProtocolKind::Sudden, tau, {}, false}; }
    static Protocol linear(double tau) { return {ProtocolKind::Linear, tau, {}, false}; }
    static Protocol smoothstep(double tau) { return {ProtocolKind::Smoothstep, tau, {}, false}; }
    static Protocol tabulated(std::vector<std::pair<double, double>> samples,
                              bool linear_interp = false) {
        Protocol p{ProtocolKind::Tabulated, 0.0, std::move(samples), linear_interp};
        if (!p.table.empty()) p.tau = p.table.back().first;
        return p;
    }
};

/// A validated, evaluatable schedule. Construction checks endpoint and
/// monotonicity invariants against the parameter set.
class FrequencySchedule {
public:
    FrequencySchedule(const OscillatorParams& params, const Protocol& protocol);

    /// omega(t); t is clamped to [0, tau].
    double operator()(double t) const;

    double tau() const { return tau_; }
    ProtocolKind kind() const { return kind_; }

private:
    ProtocolKind kind_;
    double tau_;
    double omega0_, omega1_;
    // Tabulated: nodes plus per-interval cubic coefficients (monotone slopes).
    std::vector<double> t_, w_, slope_;
    bool linear_interp_ = false;
};

} // namespace thermolen
