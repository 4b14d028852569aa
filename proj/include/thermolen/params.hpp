#pragma once

#include "thermolen/errors.hpp"
#include "thermolen/hyperbolic.hpp"

#include <cmath>

namespace thermolen {

/// Physical constants of the oscillator plus the endpoint frequencies of the drive.
struct OscillatorParams {
    double hbar = 1.0;
    double mass = 1.0;
    double beta = 1.0;   ///< inverse temperature, k_B = 1
    double omega0 = 1.0; ///< initial angular frequency
    double omega1 = 1.0; ///< final angular frequency

    void validate() const {
        auto positive = [](double v, const char* name) {
            if (!(v > 0.0) || !std::isfinite(v))
                throw InvalidParamsError(std::string(name) + " must be strictly positive and finite");
        };
        positive(hbar, "hbar");
        positive(mass, "mass");
        positive(beta, "beta");
        positive(omega0, "omega0");
        positive(omega1, "omega1");
    }

    /// beta*hbar*omega/2, the argument of most thermal hyperbolics.
    double thermal_arg(double omega) const { return 0.5 * beta * hbar * omega; }
};

} // namespace thermolen
