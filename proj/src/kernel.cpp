#include "thermolen/kernel.hpp"
#include "thermolen/errors.hpp"
#include "thermolen/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace thermolen {

namespace {

constexpr int kMinGridPoints = 64;

void check_grid(const PositionGrid& grid) {
    if (grid.n() < kMinGridPoints) throw GridError("grid needs at least 64 points");
    if (!(grid.half_width > 0.0)) throw GridError("grid half-width must be positive");
}

// Shared Gaussian-kernel assembly. The exponent is
//   -(g/4) [tanh(z) (x+y)^2 + coth(z) (x-y)^2] + i phi (x^2 - y^2)
// which keeps the two quadratic forms separately positive; the naive
// coth(2z) (x^2+y^2) - sech(2z) xy form cancels badly for cold states.
DiscretizedKernel assemble(const PositionGrid& grid, double g, double z, double phi) {
    check_grid(grid);
    const int n = grid.n();
    const double th = std::tanh(z);
    const double ct = num::coth(z);
    const double pref = std::sqrt(g * th / M_PI);

    DiscretizedKernel kernel;
    kernel.grid = grid;
    kernel.matrix.resize(n, n);
    for (int i = 0; i < n; ++i) {
        const double xi = grid.x[i];
        for (int j = 0; j <= i; ++j) {
            const double xj = grid.x[j];
            const double sp = xi + xj, sm = xi - xj;
            const double mag = pref * std::exp(-0.25 * g * (th * sp * sp + ct * sm * sm));
            if (phi == 0.0) {
                kernel.matrix(i, j) = mag;
                kernel.matrix(j, i) = mag;
            } else {
                const double arg = phi * (xi * xi - xj * xj);
                const std::complex<double> v = mag * std::complex<double>(std::cos(arg),
                                                                          std::sin(arg));
                kernel.matrix(i, j) = v;
                kernel.matrix(j, i) = std::conj(v);
            }
        }
    }

    double trace = 0.0;
    for (int i = 0; i < n; ++i) trace += kernel.matrix(i, i).real();
    const double boundary =
        (kernel.matrix(0, 0).real() + kernel.matrix(n - 1, n - 1).real()) / trace;
    if (boundary > 1e-8)
        throw GridError("grid too small: boundary carries more than 1e-8 of the trace");

    kernel.raw_trace_error = std::abs(trace * grid.dx - 1.0);
    kernel.matrix /= trace * grid.dx;
    return kernel;
}

} // namespace

PositionGrid PositionGrid::uniform(double half_width, int n) {
    if (n < 2) throw GridError("grid needs at least 2 points");
    if (!(half_width > 0.0) || !std::isfinite(half_width))
        throw GridError("grid half-width must be positive and finite");
    PositionGrid grid;
    grid.half_width = half_width;
    grid.dx = 2.0 * half_width / (n - 1);
    grid.x.resize(n);
    for (int i = 0; i < n; ++i)
        grid.x[i] = -half_width + grid.dx * i;
    return grid;
}

PositionGrid make_grid(const GridSpec& spec, std::span<const GaussianState> states) {
    if (spec.n_points < kMinGridPoints) throw GridError("grid.n_points must be >= 64");
    if (!(spec.half_width_mult > 0.0)) throw GridError("grid.half_width_mult must be positive");
    if (states.empty()) throw GridError("make_grid needs at least one state");
    double sigma = 0.0;
    for (const auto& s : states) {
        if (!(s.var_xx > 0.0)) throw InvalidStateError("state with non-positive var_xx");
        sigma = std::max(sigma, std::sqrt(s.var_xx));
    }
    return PositionGrid::uniform(spec.half_width_mult * sigma, spec.n_points);
}

DiscretizedKernel kernel_equilibrium(const OscillatorParams& params, double omega,
                                     const PositionGrid& grid) {
    params.validate();
    if (!(omega > 0.0) || !std::isfinite(omega))
        throw InvalidParamsError("omega must be strictly positive and finite");
    const double z = params.thermal_arg(omega);
    const double g = params.mass * omega / params.hbar;
    return assemble(grid, g, z, 0.0);
}

DiscretizedKernel kernel_equilibrium(const OscillatorParams& params, double omega,
                                     const GridSpec& spec) {
    const GaussianState s = equilibrium_state(params, omega);
    return kernel_equilibrium(params, omega, make_grid(spec, {&s, 1}));
}

DiscretizedKernel kernel_nonequilibrium(const OscillatorParams& params, const Trajectory& traj,
                                        const PositionGrid& grid) {
    params.validate();
    if (traj.size() == 0) throw DomainError("empty trajectory");
    if (traj.max_wronskian_defect() > 1e-9)
        throw DomainError("trajectory violates the Wronskian invariant");
    const double w0 = params.omega0;
    const double x = traj.x_end(), xd = traj.xdot_end();
    const double y = traj.y_end(), yd = traj.ydot_end();
    const double spread = y * y + w0 * w0 * x * x;         // widens the thermal cloud
    const double drift = w0 * w0 * xd * x + yd * y;        // d/dt of the half-spread
    const double g = params.mass * w0 / (params.hbar * spread);
    const double phi = params.mass * drift / (2.0 * params.hbar * spread);
    return assemble(grid, g, params.thermal_arg(w0), phi);
}

DiscretizedKernel kernel_nonequilibrium(const OscillatorParams& params, const Trajectory& traj,
                                        const GridSpec& spec) {
    const GaussianState s = nonequilibrium_state(params, traj);
    return kernel_nonequilibrium(params, traj, make_grid(spec, {&s, 1}));
}

void require_shared_grid(const DiscretizedKernel& a, const DiscretizedKernel& b) {
    if (a.grid.n() != b.grid.n() || a.grid.dx != b.grid.dx ||
        a.grid.half_width != b.grid.half_width)
        throw ShapeError("kernels live on different grids");
}

void require_density_like(const DiscretizedKernel& kernel) {
    const int n = kernel.grid.n();
    if (n == 0 || kernel.matrix.rows() != n || kernel.matrix.cols() != n)
        throw ShapeError("kernel matrix does not match its grid");
    double scale = 0.0, defect = 0.0, trace = 0.0;
    for (int i = 0; i < n; ++i) {
        trace += kernel.matrix(i, i).real();
        for (int j = 0; j <= i; ++j) {
            const auto d = kernel.matrix(i, j) - std::conj(kernel.matrix(j, i));
            defect = std::max(defect, std::abs(d));
            scale = std::max(scale, std::abs(kernel.matrix(i, j)));
        }
    }
    if (defect > 1e-12 * scale) throw InvalidStateError("kernel is not Hermitian");
    if (std::abs(trace * kernel.grid.dx - 1.0) > 1e-6)
        throw InvalidStateError("kernel trace differs from 1 beyond 1e-6");
}

std::vector<double> diagonal_density(const DiscretizedKernel& kernel) {
    std::vector<double> p(kernel.grid.n());
    for (int i = 0; i < kernel.grid.n(); ++i) p[i] = kernel.matrix(i, i).real();
    return p;
}

std::vector<double> fock_populations(const DiscretizedKernel& kernel,
                                     const OscillatorParams& params, double omega, int n_max) {
    params.validate();
    if (!(omega > 0.0)) throw InvalidParamsError("omega must be strictly positive");
    if (n_max < 0 || n_max > 200) throw DomainError("n_max must lie in [0, 200]");
    const int n = kernel.grid.n();
    if (n < 6 * n_max && n_max > 0)
        throw GridError("grid too coarse: need n_points >= 6 * n_max");

    const double scale = std::sqrt(params.mass * omega / params.hbar);
    const double dx = kernel.grid.dx;

    // Eigenfunctions phi_n on the grid by the normalized recurrence
    //   h_{n+1} = sqrt(2/(n+1)) xi h_n - sqrt(n/(n+1)) h_{n-1},
    // which keeps every column at unit L2 norm (no factorial blowup).
    Eigen::VectorXd xi(n), prev = Eigen::VectorXd::Zero(n), cur(n);
    for (int i = 0; i < n; ++i) xi[i] = scale * kernel.grid.x[i];
    const double norm0 = std::sqrt(scale) / std::pow(M_PI, 0.25);
    for (int i = 0; i < n; ++i) cur[i] = norm0 * std::exp(-0.5 * xi[i] * xi[i]);

    const Eigen::MatrixXd re = kernel.matrix.real();
    std::vector<double> pops;
    pops.reserve(n_max + 1);
    double total = 0.0;
    for (int k = 0; k <= n_max; ++k) {
        const double self = cur.squaredNorm() * dx;
        if (std::abs(self - 1.0) > 1e-6)
            throw GridError("grid does not resolve eigenfunction n=" + std::to_string(k));
        // Im(K) is antisymmetric, so only Re(K) contributes to <phi|K|phi>.
        double p = dx * dx * cur.dot(re * cur);
        if (p < 0.0) {
            if (p < -1e-8) throw NumericError("negative population beyond quadrature noise");
            p = 0.0;
        }
        if (p > 1.0) {
            if (p > 1.0 + 1e-8) throw NumericError("population above 1 beyond quadrature noise");
            p = 1.0;
        }
        pops.push_back(p);
        total += p;
        Eigen::VectorXd next = std::sqrt(2.0 / (k + 1)) * xi.cwiseProduct(cur) -
                               std::sqrt(static_cast<double>(k) / (k + 1)) * prev;
        prev.swap(cur);
        cur.swap(next);
    }
    if (total > 1.0 + 1e-8) throw NumericError("populations sum beyond unit mass");
    return pops;
}

} // namespace thermolen
