#pragma once

#include <cmath>
#include <limits>

// Overflow-safe hyperbolic helpers. All of these stay accurate for
// arguments from ~1e-8 up to ~1e4, where naive sinh/cosh ratios would
// overflow or cancel.

namespace thermolen::num {

/// coth(z) for z > 0.
inline double coth(double z) {
    // coth z = 1 + 2/(e^{2z} - 1); expm1 keeps small z accurate.
    if (z > 350.0) return 1.0;
    return 1.0 + 2.0 / std::expm1(2.0 * z);
}

/// 1/sinh(z) for z > 0.
inline double csch(double z) {
    // 2 e^{-z} / (1 - e^{-2z}); no overflow for large z.
    const double em = -std::expm1(-2.0 * z);
    if (em == 0.0) return std::numeric_limits<double>::infinity();
    return 2.0 * std::exp(-z) / em;
}

/// log(sinh(z)) for z > 0, without overflow.
inline double log_sinh(double z) {
    return z - std::log(2.0) + std::log1p(-std::exp(-2.0 * z));
}

/// Quintic smoothstep on [0,1]: zero first and second derivative at both ends.
inline double smoothstep5(double s) {
    if (s <= 0.0) return 0.0;
    if (s >= 1.0) return 1.0;
    return s * s * s * (s * (6.0 * s - 15.0) + 10.0);
}

} // namespace thermolen::num
