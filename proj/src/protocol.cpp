#include "thermolen/protocol.hpp"
#include "thermolen/errors.hpp"
#include "thermolen/hyperbolic.hpp"

#include <algorithm>
#include <cmath>

namespace thermolen {

namespace {

// Fritsch-Carlson slopes: the interpolant is C1, monotone on each interval,
// and never leaves the range of the node values (so omega stays positive).
// Hand-rolled because common pchip implementations need >= 4 nodes and
// config tables may carry as few as 2.
std::vector<double> monotone_slopes(const std::vector<double>& t, const std::vector<double>& w) {
    const std::size_t n = t.size();
    std::vector<double> h(n - 1), d(n - 1), m(n);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        h[k] = t[k + 1] - t[k];
        d[k] = (w[k + 1] - w[k]) / h[k];
    }
    if (n == 2) {
        m[0] = m[1] = d[0];
        return m;
    }
    auto endpoint = [](double h0, double h1, double d0, double d1) {
        double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        if (s * d0 <= 0.0) return 0.0;
        if (d0 * d1 < 0.0 && std::abs(s) > 3.0 * std::abs(d0)) return 3.0 * d0;
        return s;
    };
    m[0] = endpoint(h[0], h[1], d[0], d[1]);
    m[n - 1] = endpoint(h[n - 2], h[n - 3], d[n - 2], d[n - 3]);
    for (std::size_t k = 1; k + 1 < n; ++k) {
        if (d[k - 1] * d[k] <= 0.0) {
            m[k] = 0.0;
        } else {
            const double w1 = 2.0 * h[k] + h[k - 1];
            const double w2 = h[k] + 2.0 * h[k - 1];
            m[k] = (w1 + w2) / (w1 / d[k - 1] + w2 / d[k]);
        }
    }
    return m;
}

} // namespace

FrequencySchedule::FrequencySchedule(const OscillatorParams& params, const Protocol& protocol)
    : kind_(protocol.kind), tau_(protocol.tau), omega0_(params.omega0), omega1_(params.omega1),
      linear_interp_(protocol.linear_interp) {
    params.validate();
    if (!std::isfinite(tau_) || tau_ < 0.0)
        throw InvalidProtocolError("protocol tau must be finite and >= 0");

    if (kind_ == ProtocolKind::Tabulated) {
        if (protocol.table.size() < 2)
            throw InvalidProtocolError("tabulated protocol needs at least 2 samples");
        t_.reserve(protocol.table.size());
        w_.reserve(protocol.table.size());
        for (const auto& [t, w] : protocol.table) {
            if (!std::isfinite(t) || !std::isfinite(w))
                throw InvalidProtocolError("tabulated protocol contains non-finite samples");
            if (w <= 0.0)
                throw InvalidProtocolError("tabulated protocol frequencies must be positive");
            if (!t_.empty() && t <= t_.back())
                throw InvalidProtocolError("tabulated protocol times must be strictly increasing");
            t_.push_back(t);
            w_.push_back(w);
        }
        tau_ = t_.back();
        if (std::abs(t_.front()) > 1e-12 * std::max(1.0, tau_))
            throw InvalidProtocolError("tabulated protocol must start at t = 0");
        t_.front() = 0.0;
        if (std::abs(w_.front() - omega0_) > 1e-12 * omega0_)
            throw InvalidProtocolError("tabulated protocol must start at omega0");
        if (std::abs(w_.back() - omega1_) > 1e-12 * omega1_)
            throw InvalidProtocolError("tabulated protocol must end at omega1");
        if (!linear_interp_) slope_ = monotone_slopes(t_, w_);
    } else if (kind_ != ProtocolKind::Sudden) {
        // A zero-duration ramp only makes sense when nothing actually ramps.
        if (tau_ == 0.0 && std::abs(omega0_ - omega1_) > 1e-12 * std::max(omega0_, omega1_))
            throw InvalidProtocolError("tau = 0 requires a sudden protocol when omega0 != omega1");
    }
}

double FrequencySchedule::operator()(double t) const {
    if (t <= 0.0) return omega0_;
    if (t >= tau_) return omega1_;
    switch (kind_) {
    case ProtocolKind::Sudden:
        return omega1_;
    case ProtocolKind::Linear:
        return omega0_ + (omega1_ - omega0_) * (t / tau_);
    case ProtocolKind::Smoothstep:
        return omega0_ + (omega1_ - omega0_) * num::smoothstep5(t / tau_);
    case ProtocolKind::Tabulated: {
        const auto it = std::upper_bound(t_.begin(), t_.end(), t);
        const std::size_t k = static_cast<std::size_t>(it - t_.begin()) - 1;
        const double h = t_[k + 1] - t_[k];
        const double s = (t - t_[k]) / h;
        if (linear_interp_) return w_[k] + (w_[k + 1] - w_[k]) * s;
        const double s2 = s * s, s3 = s2 * s;
        return (2.0 * s3 - 3.0 * s2 + 1.0) * w_[k] + (s3 - 2.0 * s2 + s) * h * slope_[k] +
               (-2.0 * s3 + 3.0 * s2) * w_[k + 1] + (s3 - s2) * h * slope_[k + 1];
    }
    }
    return omega1_; // unreachable
}

} // namespace thermolen
