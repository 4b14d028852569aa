#pragma once

#include "thermolen/kernel.hpp"

#include <optional>
#include <vector>

namespace thermolen {

/// Bures angle arccos(sqrt(F)); ranges over [0, pi/2].
double bures_angle(double fidelity);

/// Bures distance sqrt(2 (1 - sqrt(F))); ranges over [0, sqrt(2)].
double bures_distance(double fidelity);

/// Classical probability density on a uniform grid.
struct DiscretizedDensity {
    std::vector<double> p;
    double dx = 0.0;
};

struct HellingerResult {
    double distance; ///< sqrt(2 - 2f)
    double fidelity; ///< Bhattacharyya coefficient f = sum sqrt(p1 p2) dx
    double length;   ///< classical statistical length arccos(f)
};

HellingerResult hellinger_distance(const DiscretizedDensity& p1, const DiscretizedDensity& p2);

/// (1/2) sum |lambda_i| over the eigenvalues of dx * (K1 - K2).
double trace_distance(const DiscretizedKernel& k1, const DiscretizedKernel& k2);

/// Trace distance between the driven state and the final equilibrium state,
/// with a grid-refinement certificate: the computation is repeated with the
/// spacing halved and flagged unconverged if the value moves by >= 1e-4.
struct TraceDistanceResult {
    double value;            ///< at the requested resolution
    double refined_value;    ///< at doubled resolution
    double refinement_delta; ///< |refined_value - value|
    bool grid_converged;     ///< refinement_delta < 1e-4
};

TraceDistanceResult trace_distance_refined(const OscillatorParams& params,
                                           const Trajectory& traj, const GridSpec& spec);

/// Distances between one pair of states, with the normalization constants
/// d(e11, e22) that calibrate each metric's Clausius-type bound.
struct MetricReport {
    double fidelity = 1.0;
    double bures_angle = 0.0;
    double bures_distance = 0.0;
    std::optional<double> trace_distance;
    double norm_bures_angle;    ///< pi/2
    double norm_bures_distance; ///< sqrt(2)
    double norm_trace_distance; ///< 1
};

MetricReport metric_report(double fidelity, std::optional<double> trace = std::nullopt);

} // namespace thermolen
