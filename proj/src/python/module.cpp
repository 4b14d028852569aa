#include "thermolen/bounds.hpp"
#include "thermolen/config.hpp"
#include "thermolen/errors.hpp"
#include "thermolen/gaussian.hpp"
#include "thermolen/kernel.hpp"
#include "thermolen/metrics.hpp"
#include "thermolen/params.hpp"
#include "thermolen/protocol.hpp"
#include "thermolen/runner.hpp"
#include "thermolen/trajectory.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace thermolen;

PYBIND11_MODULE(_core, m) {
    m.doc() = "entropy production of the driven quantum oscillator, with "
              "thermodynamic-length bounds";

    py::register_exception<Error>(m, "Error");

    py::class_<OscillatorParams>(m, "OscillatorParams")
        .def(py::init([](double hbar, double mass, double beta, double omega0, double omega1) {
                 OscillatorParams p{hbar, mass, beta, omega0, omega1};
                 p.validate();
                 return p;
             }),
             py::arg("hbar") = 1.0, py::arg("mass") = 1.0, py::arg("beta") = 1.0,
             py::arg("omega0") = 1.0, py::arg("omega1") = 1.0)
        .def_readwrite("hbar", &OscillatorParams::hbar)
        .def_readwrite("mass", &OscillatorParams::mass)
        .def_readwrite("beta", &OscillatorParams::beta)
        .def_readwrite("omega0", &OscillatorParams::omega0)
        .def_readwrite("omega1", &OscillatorParams::omega1)
        .def("validate", &OscillatorParams::validate)
        .def("__repr__", [](const OscillatorParams& p) {
            std::ostringstream os;
            os << "OscillatorParams(hbar=" << p.hbar << ", mass=" << p.mass
               << ", beta=" << p.beta << ", omega0=" << p.omega0 << ", omega1=" << p.omega1
               << ")";
            return os.str();
        });

    py::enum_<ProtocolKind>(m, "ProtocolKind")
        .value("sudden", ProtocolKind::Sudden)
        .value("linear", ProtocolKind::Linear)
        .value("smoothstep", ProtocolKind::Smoothstep)
        .value("tabulated", ProtocolKind::Tabulated);

    py::class_<Protocol>(m, "Protocol")
        .def(py::init<>())
        .def_static("sudden", &Protocol::sudden, py::arg("tau") = 0.0)
        .def_static("linear", &Protocol::linear, py::arg("tau"))
        .def_static("smoothstep", &Protocol::smoothstep, py::arg("tau"))
        .def_static("tabulated", &Protocol::tabulated, py::arg("samples"),
                    py::arg("linear_interp") = false)
        .def_readwrite("kind", &Protocol::kind)
        .def_readwrite("tau", &Protocol::tau)
        .def_readwrite("table", &Protocol::table)
        .def_readwrite("linear_interp", &Protocol::linear_interp);

    py::class_<FrequencySchedule>(m, "FrequencySchedule")
        .def(py::init<const OscillatorParams&, const Protocol&>())
        .def("__call__", &FrequencySchedule::operator())
        .def_property_readonly("tau", &FrequencySchedule::tau);

    py::class_<Trajectory>(m, "Trajectory")
        .def_readonly("times", &Trajectory::times)
        .def_readonly("x", &Trajectory::x)
        .def_readonly("xdot", &Trajectory::xdot)
        .def_readonly("y", &Trajectory::y)
        .def_readonly("ydot", &Trajectory::ydot)
        .def("__len__", &Trajectory::size)
        .def_property_readonly("tau", &Trajectory::tau)
        .def("max_wronskian_defect", &Trajectory::max_wronskian_defect);

    m.def("integrate_trajectory", &integrate_trajectory, py::arg("params"), py::arg("protocol"),
          py::arg("tol") = 1e-10);
    m.def("adiabaticity", &adiabaticity, py::arg("params"), py::arg("traj"));
    m.def("sudden_qstar", &sudden_qstar, py::arg("params"));
    m.def("mean_energy_final", &mean_energy_final, py::arg("params"), py::arg("qstar"));
    m.def("ground_state_persistence", &ground_state_persistence, py::arg("qstar"));
    m.def("qstar_profile", &qstar_profile, py::arg("params"), py::arg("protocol"),
          py::arg("traj"));

    py::class_<GaussianState>(m, "GaussianState")
        .def(py::init<>())
        .def_readwrite("mean_x", &GaussianState::mean_x)
        .def_readwrite("mean_p", &GaussianState::mean_p)
        .def_readwrite("var_xx", &GaussianState::var_xx)
        .def_readwrite("var_pp", &GaussianState::var_pp)
        .def_readwrite("cov_xp", &GaussianState::cov_xp)
        .def_readwrite("hbar", &GaussianState::hbar)
        .def("det_a", &GaussianState::det_a)
        .def("validate", &GaussianState::validate)
        .def("__repr__", [](const GaussianState& s) {
            std::ostringstream os;
            os << "GaussianState(var_xx=" << s.var_xx << ", var_pp=" << s.var_pp
               << ", cov_xp=" << s.cov_xp << ")";
            return os.str();
        });

    m.def("equilibrium_state", &equilibrium_state, py::arg("params"), py::arg("omega"));
    m.def("nonequilibrium_state", &nonequilibrium_state, py::arg("params"), py::arg("traj"));
    m.def("gaussian_fidelity", &gaussian_fidelity, py::arg("s1"), py::arg("s2"));
    m.def("closed_form_fidelity", &closed_form_fidelity, py::arg("params"), py::arg("qstar"));

    py::class_<GridSpec>(m, "GridSpec")
        .def(py::init([](int n_points, double half_width_mult) {
                 return GridSpec{n_points, half_width_mult};
             }),
             py::arg("n_points") = 601, py::arg("half_width_mult") = 8.0)
        .def_readwrite("n_points", &GridSpec::n_points)
        .def_readwrite("half_width_mult", &GridSpec::half_width_mult);

    py::class_<PositionGrid>(m, "PositionGrid")
        .def_readonly("x", &PositionGrid::x)
        .def_readonly("dx", &PositionGrid::dx)
        .def_readonly("half_width", &PositionGrid::half_width)
        .def("__len__", &PositionGrid::n)
        .def_static("uniform", &PositionGrid::uniform, py::arg("half_width"), py::arg("n"));

    m.def(
        "make_grid",
        [](const GridSpec& spec, const std::vector<GaussianState>& states) {
            return make_grid(spec, states);
        },
        py::arg("spec"), py::arg("states"));

    py::class_<DiscretizedKernel>(m, "DiscretizedKernel")
        .def_readonly("grid", &DiscretizedKernel::grid)
        .def_readonly("matrix", &DiscretizedKernel::matrix)
        .def_readonly("raw_trace_error", &DiscretizedKernel::raw_trace_error);

    m.def("kernel_equilibrium",
          py::overload_cast<const OscillatorParams&, double, const PositionGrid&>(
              &kernel_equilibrium),
          py::arg("params"), py::arg("omega"), py::arg("grid"));
    m.def("kernel_equilibrium",
          py::overload_cast<const OscillatorParams&, double, const GridSpec&>(
              &kernel_equilibrium),
          py::arg("params"), py::arg("omega"), py::arg("spec"));
    m.def("kernel_nonequilibrium",
          py::overload_cast<const OscillatorParams&, const Trajectory&, const PositionGrid&>(
              &kernel_nonequilibrium),
          py::arg("params"), py::arg("traj"), py::arg("grid"));
    m.def("kernel_nonequilibrium",
          py::overload_cast<const OscillatorParams&, const Trajectory&, const GridSpec&>(
              &kernel_nonequilibrium),
          py::arg("params"), py::arg("traj"), py::arg("spec"));
    m.def("diagonal_density", &diagonal_density, py::arg("kernel"));
    m.def("fock_populations", &fock_populations, py::arg("kernel"), py::arg("params"),
          py::arg("omega"), py::arg("n_max"));

    m.def("bures_angle", &bures_angle, py::arg("fidelity"));
    m.def("bures_distance", &bures_distance, py::arg("fidelity"));

    py::class_<DiscretizedDensity>(m, "DiscretizedDensity")
        .def(py::init([](std::vector<double> p, double dx) {
                 return DiscretizedDensity{std::move(p), dx};
             }),
             py::arg("p"), py::arg("dx"))
        .def_readwrite("p", &DiscretizedDensity::p)
        .def_readwrite("dx", &DiscretizedDensity::dx);

    py::class_<HellingerResult>(m, "HellingerResult")
        .def_readonly("distance", &HellingerResult::distance)
        .def_readonly("fidelity", &HellingerResult::fidelity)
        .def_readonly("length", &HellingerResult::length);

    m.def("hellinger_distance", &hellinger_distance, py::arg("p1"), py::arg("p2"));
    m.def("trace_distance", &trace_distance, py::arg("k1"), py::arg("k2"));

    py::class_<TraceDistanceResult>(m, "TraceDistanceResult")
        .def_readonly("value", &TraceDistanceResult::value)
        .def_readonly("refined_value", &TraceDistanceResult::refined_value)
        .def_readonly("refinement_delta", &TraceDistanceResult::refinement_delta)
        .def_readonly("grid_converged", &TraceDistanceResult::grid_converged);

    m.def("trace_distance_refined", &trace_distance_refined, py::arg("params"), py::arg("traj"),
          py::arg("spec"));

    py::class_<MetricReport>(m, "MetricReport")
        .def_readonly("fidelity", &MetricReport::fidelity)
        .def_readonly("bures_angle", &MetricReport::bures_angle)
        .def_readonly("bures_distance", &MetricReport::bures_distance)
        .def_readonly("trace_distance", &MetricReport::trace_distance)
        .def_readonly("norm_bures_angle", &MetricReport::norm_bures_angle)
        .def_readonly("norm_bures_distance", &MetricReport::norm_bures_distance)
        .def_readonly("norm_trace_distance", &MetricReport::norm_trace_distance);

    m.def("metric_report", &metric_report, py::arg("fidelity"),
          py::arg("trace") = std::nullopt);

    m.def("s_exact", &s_exact, py::arg("x"));
    m.def("s_series", &s_series, py::arg("x"), py::arg("n_terms"));
    m.def("sigma_exact", &sigma_exact, py::arg("params"), py::arg("qstar"));

    py::class_<RelativeEntropyResult>(m, "RelativeEntropyResult")
        .def_readonly("value", &RelativeEntropyResult::value)
        .def_readonly("excluded_mass_state", &RelativeEntropyResult::excluded_mass_state)
        .def_readonly("excluded_mass_reference",
                      &RelativeEntropyResult::excluded_mass_reference);

    m.def("sigma_numeric", &sigma_numeric, py::arg("k_noneq"), py::arg("k_eq"));

    py::class_<LowerBounds>(m, "LowerBounds")
        .def_readonly("s_bures", &LowerBounds::s_bures)
        .def_readonly("leading_bures", &LowerBounds::leading_bures)
        .def_readonly("bures_distance_sq", &LowerBounds::bures_distance_sq)
        .def_readonly("s_trace", &LowerBounds::s_trace);

    m.def("lower_bounds", &lower_bounds, py::arg("fidelity"),
          py::arg("trace_dist") = std::nullopt);

    py::enum_<ClassicalConvention>(m, "ClassicalConvention")
        .value("quantum_consistent", ClassicalConvention::QuantumConsistent)
        .value("literal", ClassicalConvention::Literal);

    py::class_<ClassicalBound>(m, "ClassicalBound")
        .def_readonly("s_value", &ClassicalBound::s_value)
        .def_readonly("leading", &ClassicalBound::leading);

    m.def("classical_lower_bound", &classical_lower_bound, py::arg("ell"),
          py::arg("convention"));

    py::enum_<SpectralMode>(m, "SpectralMode")
        .value("eigenvalue", SpectralMode::Eigenvalue)
        .value("population", SpectralMode::Population);

    m.def(
        "upper_bound_spectral",
        [](const OscillatorParams& params, SpectralMode mode,
           const std::vector<double>& populations) {
            return upper_bound_spectral(params, mode, populations);
        },
        py::arg("params"), py::arg("mode"), py::arg("populations") = std::vector<double>{});

    py::class_<WorkDecomposition>(m, "WorkDecomposition")
        .def_readonly("mean_work", &WorkDecomposition::mean_work)
        .def_readonly("delta_f", &WorkDecomposition::delta_f)
        .def_readonly("sigma", &WorkDecomposition::sigma);

    m.def("work_decomposition", &work_decomposition, py::arg("params"), py::arg("qstar"));

    py::class_<ReportOptions>(m, "ReportOptions")
        .def(py::init<>())
        .def_readwrite("with_trace", &ReportOptions::with_trace)
        .def_readwrite("with_upper", &ReportOptions::with_upper)
        .def_readwrite("grid", &ReportOptions::grid)
        .def_readwrite("population_n_max", &ReportOptions::population_n_max)
        .def_readwrite("tol", &ReportOptions::tol);

    py::class_<BoundReport>(m, "BoundReport")
        .def_readonly("qstar", &BoundReport::qstar)
        .def_readonly("fidelity", &BoundReport::fidelity)
        .def_readonly("sigma", &BoundReport::sigma)
        .def_readonly("bures_angle", &BoundReport::bures_angle)
        .def_readonly("s_bures", &BoundReport::s_bures)
        .def_readonly("leading_bures", &BoundReport::leading_bures)
        .def_readonly("bures_distance_sq", &BoundReport::bures_distance_sq)
        .def_readonly("trace_distance", &BoundReport::trace_distance)
        .def_readonly("s_trace", &BoundReport::s_trace)
        .def_readonly("trace_grid_converged", &BoundReport::trace_grid_converged)
        .def_readonly("upper_eigenvalue", &BoundReport::upper_eigenvalue)
        .def_readonly("upper_population", &BoundReport::upper_population)
        .def("__repr__", [](const BoundReport& r) {
            std::ostringstream os;
            os << "BoundReport(qstar=" << r.qstar << ", sigma=" << r.sigma
               << ", s_bures=" << r.s_bures << ")";
            return os.str();
        });

    m.def("report_for_qstar", &report_for_qstar, py::arg("params"), py::arg("qstar"),
          py::arg("opts") = ReportOptions{});
    m.def("report_for_protocol", &report_for_protocol, py::arg("params"), py::arg("protocol"),
          py::arg("opts") = ReportOptions{});
    m.def("chain_violations", &chain_violations, py::arg("report"));
    m.def("upper_bound_breaches", &upper_bound_breaches, py::arg("report"));
}
