#pragma once

#include "thermolen/gaussian.hpp"
#include "thermolen/params.hpp"
#include "thermolen/trajectory.hpp"

#include <Eigen/Core>

#include <span>
#include <vector>

namespace thermolen {

/// Discretization request: point count and half-width in units of the
/// largest position standard deviation among the states on the grid.
struct GridSpec {
    int n_points = 601;
    double half_width_mult = 8.0;
};

/// Uniform symmetric position grid on [-L, L], endpoints included.
struct PositionGrid {
    std::vector<double> x;
    double dx = 0.0;
    double half_width = 0.0;

    int n() const { return static_cast<int>(x.size()); }
    static PositionGrid uniform(double half_width, int n);
};

/// Grid sized to cover every state in `states` out to
/// half_width_mult standard deviations.
PositionGrid make_grid(const GridSpec& spec, std::span<const GaussianState> states);

/// Density operator rho(x_i, x_j) sampled on a grid, trace-normalized so
/// that dx * sum_i K_ii = 1. The pre-normalization trace defect is kept
/// for diagnostics.
struct DiscretizedKernel {
    PositionGrid grid;
    Eigen::MatrixXcd matrix;
    double raw_trace_error = 0.0;
};

DiscretizedKernel kernel_equilibrium(const OscillatorParams& params, double omega,
                                     const PositionGrid& grid);
DiscretizedKernel kernel_equilibrium(const OscillatorParams& params, double omega,
                                     const GridSpec& spec);

DiscretizedKernel kernel_nonequilibrium(const OscillatorParams& params, const Trajectory& traj,
                                        const PositionGrid& grid);
DiscretizedKernel kernel_nonequilibrium(const OscillatorParams& params, const Trajectory& traj,
                                        const GridSpec& spec);

/// Diagonal probability density rho(x_i, x_i).
std::vector<double> diagonal_density(const DiscretizedKernel& kernel);

/// Throws ShapeError unless both kernels live on the same grid.
void require_shared_grid(const DiscretizedKernel& a, const DiscretizedKernel& b);

/// Throws unless the kernel is Hermitian (1e-12 of its scale) with unit
/// quadrature trace (1e-6).
void require_density_like(const DiscretizedKernel& kernel);

/// Populations <n|rho|n> for n = 0..n_max in the harmonic eigenbasis at
/// frequency omega, by quadrature against recurrence-evaluated eigenfunctions.
std::vector<double> fock_populations(const DiscretizedKernel& kernel,
                                     const OscillatorParams& params, double omega, int n_max);

} // namespace thermolen
