"""Entropy production of the driven quantum oscillator, with thermodynamic-length bounds."""

from ._core import (
    BoundReport,
    ClassicalBound,
    ClassicalConvention,
    DiscretizedDensity,
    DiscretizedKernel,
    Error,
    FrequencySchedule,
    GaussianState,
    GridSpec,
    HellingerResult,
    LowerBounds,
    MetricReport,
    OscillatorParams,
    PositionGrid,
    Protocol,
    ProtocolKind,
    RelativeEntropyResult,
    ReportOptions,
    SpectralMode,
    TraceDistanceResult,
    Trajectory,
    WorkDecomposition,
    adiabaticity,
    bures_angle,
    bures_distance,
    chain_violations,
    classical_lower_bound,
    closed_form_fidelity,
    diagonal_density,
    equilibrium_state,
    fock_populations,
    gaussian_fidelity,
    ground_state_persistence,
    hellinger_distance,
    integrate_trajectory,
    kernel_equilibrium,
    kernel_nonequilibrium,
    lower_bounds,
    make_grid,
    mean_energy_final,
    metric_report,
    nonequilibrium_state,
    qstar_profile,
    report_for_protocol,
    report_for_qstar,
    s_exact,
    s_series,
    sigma_exact,
    sigma_numeric,
    sudden_qstar,
    trace_distance,
    trace_distance_refined,
    upper_bound_breaches,
    upper_bound_spectral,
    work_decomposition,
)

__all__ = [
    "BoundReport",
    "ClassicalBound",
    "ClassicalConvention",
    "DiscretizedDensity",
    "DiscretizedKernel",
    "Error",
    "FrequencySchedule",
    "GaussianState",
    "GridSpec",
    "HellingerResult",
    "LowerBounds",
    "MetricReport",
    "OscillatorParams",
    "PositionGrid",
    "Protocol",
    "ProtocolKind",
    "RelativeEntropyResult",
    "ReportOptions",
    "SpectralMode",
    "TraceDistanceResult",
    "Trajectory",
    "WorkDecomposition",
    "adiabaticity",
    "bures_angle",
    "bures_distance",
    "chain_violations",
    "classical_lower_bound",
    "closed_form_fidelity",
    "diagonal_density",
    "equilibrium_state",
    "fock_populations",
    "gaussian_fidelity",
    "ground_state_persistence",
    "hellinger_distance",
    "integrate_trajectory",
    "kernel_equilibrium",
    "kernel_nonequilibrium",
    "lower_bounds",
    "make_grid",
    "mean_energy_final",
    "metric_report",
    "nonequilibrium_state",
    "qstar_profile",
    "report_for_protocol",
    "report_for_qstar",
    "s_exact",
    "s_series",
    "sigma_exact",
    "sigma_numeric",
    "sudden_qstar",
    "trace_distance",
    "trace_distance_refined",
    "upper_bound_breaches",
    "upper_bound_spectral",
    "work_decomposition",
]

__version__ = "0.1.0"
