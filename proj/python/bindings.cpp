#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nuosc/app/format.hpp"
#include "nuosc/errors.hpp"
#include "nuosc/nu_core.hpp"
#include "nuosc/observables.hpp"
#include "nuosc/oracle.hpp"
#include "nuosc/specfun.hpp"
#include "nuosc/wavefunction.hpp"

namespace py = pybind11;
using namespace nuosc;

namespace {

void register_errors(py::module_& m)
{
    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", base);
    py::register_exception<ComplexBranch>(m, "ComplexBranch", base);
    py::register_exception<NoSignChange>(m, "NoSignChange", base);
    py::register_exception<NonConvergence>(m, "NonConvergence", base);
    py::register_exception<DegenerateStep>(m, "DegenerateStep", base);
    py::register_exception<GridTooCoarse>(m, "GridTooCoarse", base);
    py::register_exception<NoConvergenceUnderRefinement>(m, "NoConvergenceUnderRefinement", base);
    py::register_exception<IndexError>(m, "IndexError", base);
    py::register_exception<ConfigError>(m, "ConfigError", base);
    py::register_exception<IOError>(m, "IOError", base);
}

} // namespace

PYBIND11_MODULE(_nuosc, m)
{
    m.doc() = "Oscillator-plus-inverse-quadratic spectra in a magnetic field";
    register_errors(m);

    py::enum_<UnitsMode>(m, "UnitsMode").value("paper", UnitsMode::paper).value("dimensionless",
                                                                                UnitsMode::dimensionless);

    py::class_<MoleculeConstants>(m, "MoleculeConstants")
        .def(py::init<std::string, double, double>(), py::arg("name"), py::arg("omega"), py::arg("mass"))
        .def_readwrite("name", &MoleculeConstants::name)
        .def_readwrite("omega", &MoleculeConstants::omega)
        .def_readwrite("mass", &MoleculeConstants::mass)
        .def("__repr__", [](MoleculeConstants const& c) {
            return "MoleculeConstants(name='" + c.name + "', omega=" + py::repr(py::float_(c.omega)).cast<std::string>() +
                   ", mass=" + py::repr(py::float_(c.mass)).cast<std::string>() + ")";
        });

    py::class_<FieldParams>(m, "FieldParams")
        .def(py::init([](double omega_L, double g) { return FieldParams{omega_L, g}; }), py::arg("omega_L") = 0.0,
             py::arg("g") = 0.0)
        .def_readwrite("omega_L", &FieldParams::omega_L)
        .def_readwrite("g", &FieldParams::g);

    py::class_<QuantumNumbers>(m, "QuantumNumbers")
        .def(py::init([](int n, int mq) { return QuantumNumbers{n, mq}; }), py::arg("n") = 0, py::arg("m") = 0)
        .def_readwrite("n", &QuantumNumbers::n)
        .def_readwrite("m", &QuantumNumbers::m);

    py::class_<WorkingUnits>(m, "WorkingUnits")
        .def_readonly("mu_eff", &WorkingUnits::mu_eff)
        .def_readonly("omega_eff", &WorkingUnits::omega_eff)
        .def_readonly("mode", &WorkingUnits::mode)
        .def("stiffness", &WorkingUnits::stiffness);

    py::class_<SusceptibilityConstants>(m, "SusceptibilityConstants")
        .def(py::init<>())
        .def_readwrite("N", &SusceptibilityConstants::N)
        .def_readwrite("z", &SusceptibilityConstants::z)
        .def_readwrite("e", &SusceptibilityConstants::e)
        .def_readwrite("c", &SusceptibilityConstants::c);

    py::class_<NUCoefficients>(m, "NUCoefficients")
        .def(py::init([](double b1, double b2, double b3, double r0, double r1, double r2) {
                 return NUCoefficients{b1, b2, b3, r0, r1, r2};
             }),
             py::arg("beta1") = 0.0, py::arg("beta2") = 0.0, py::arg("beta3") = 0.0, py::arg("rho0") = 0.0,
             py::arg("rho1") = 0.0, py::arg("rho2") = 0.0)
        .def_readwrite("beta1", &NUCoefficients::beta1)
        .def_readwrite("beta2", &NUCoefficients::beta2)
        .def_readwrite("beta3", &NUCoefficients::beta3)
        .def_readwrite("rho0", &NUCoefficients::rho0)
        .def_readwrite("rho1", &NUCoefficients::rho1)
        .def_readwrite("rho2", &NUCoefficients::rho2);

    py::class_<NUConstants>(m, "NUConstants")
        .def_readonly("beta4", &NUConstants::beta4)
        .def_readonly("beta5", &NUConstants::beta5)
        .def_readonly("beta6", &NUConstants::beta6)
        .def_readonly("beta7", &NUConstants::beta7)
        .def_readonly("beta8", &NUConstants::beta8)
        .def_readonly("beta9", &NUConstants::beta9)
        .def_readonly("beta10", &NUConstants::beta10)
        .def_readonly("beta11", &NUConstants::beta11)
        .def_readonly("beta12", &NUConstants::beta12)
        .def_readonly("beta13", &NUConstants::beta13);

    m.def("derive_constants", &derive_constants, py::arg("coefficients"));
    m.def("energy_residual", &energy_residual, py::arg("n"), py::arg("coefficients"));
    m.def(
        "solve_energy",
        [](int n, std::function<NUCoefficients(double)> const& map, std::pair<double, double> bracket, double tol) {
            return solve_energy(n, map, {bracket.first, bracket.second}, tol);
        },
        py::arg("n"), py::arg("coefficients_of_energy"), py::arg("bracket"), py::arg("tol") = 1e-10);

    // model
    m.def("builtin_molecules", &builtin_molecules);
    m.def("load_molecules", &load_molecules, py::arg("path"));
    m.def("working_units", py::overload_cast<MoleculeConstants const&, UnitsMode>(&working_units), py::arg("molecule"),
          py::arg("mode") = UnitsMode::paper);
    m.def("dimensionless_stiffness", &dimensionless_stiffness, py::arg("Omega"));
    m.def("confinement_frequency", &confinement_frequency, py::arg("units"), py::arg("field"));
    m.def("effective_potential", &effective_potential, py::arg("r"), py::arg("units"), py::arg("field"),
          py::arg("m"));
    m.def("to_nu_coefficients", &to_nu_coefficients, py::arg("units"), py::arg("field"), py::arg("m"),
          py::arg("E"));
    m.def("solve_level", &solve_level, py::arg("q"), py::arg("units"), py::arg("field"));

    // observables
    m.def("energy", &energy, py::arg("q"), py::arg("units"), py::arg("field"));
    m.def("expectation_r2", &expectation_r2, py::arg("q"), py::arg("units"), py::arg("field"));
    m.def("expectation_p2", &expectation_p2, py::arg("q"), py::arg("units"), py::arg("field"));
    m.def("expectation_T", &expectation_T, py::arg("q"), py::arg("units"), py::arg("field"));
    m.def("expectation_V", &expectation_V, py::arg("q"), py::arg("units"), py::arg("field"));
    m.def("susceptibility", &susceptibility, py::arg("q"), py::arg("units"), py::arg("field"),
          py::arg("constants") = SusceptibilityConstants{});
    m.def("magnetic_moment", &magnetic_moment, py::arg("q"), py::arg("units"), py::arg("field"),
          py::arg("constants") = SusceptibilityConstants{});

    py::class_<HftReport>(m, "HftReport")
        .def_readonly("lhs", &HftReport::lhs)
        .def_readonly("rhs", &HftReport::rhs)
        .def_readonly("rel_err", &HftReport::rel_err);
    m.def("hft_check", &hft_check, py::arg("q"), py::arg("units"), py::arg("field"), py::arg("h"));

    // special functions
    m.def("laguerre", &laguerre, py::arg("n"), py::arg("alpha"), py::arg("x"));
    m.def("ln_gamma", &ln_gamma, py::arg("x"));
    m.def(
        "gauss_laguerre",
        [](int order, double alpha) {
            QuadratureRule const r = gauss_laguerre(order, alpha);
            return py::make_tuple(r.nodes, r.weights);
        },
        py::arg("order"), py::arg("alpha"), "Returns (nodes, weights).");

    // wavefunction
    py::class_<RadialState>(m, "RadialState")
        .def_readonly("q", &RadialState::q)
        .def_readonly("delta", &RadialState::delta)
        .def_readonly("gamma", &RadialState::gamma)
        .def_readwrite("norm", &RadialState::norm)
        .def("laguerre_alpha", &RadialState::laguerre_alpha);
    m.def("make_radial_state",
          py::overload_cast<QuantumNumbers const&, WorkingUnits const&, FieldParams const&>(&make_radial_state),
          py::arg("q"), py::arg("units"), py::arg("field"));
    m.def("make_radial_state_gamma", py::overload_cast<QuantumNumbers const&, double, double>(&make_radial_state),
          py::arg("q"), py::arg("g"), py::arg("gamma"));
    m.def("radial_value", &radial_value, py::arg("state"), py::arg("r"));
    m.def("numeric_norm", &numeric_norm, py::arg("state"), py::arg("order") = default_quadrature_order);
    m.def("numeric_expectation_r2", &numeric_expectation_r2, py::arg("state"),
          py::arg("order") = default_quadrature_order);
    m.def("numeric_overlap", &numeric_overlap, py::arg("a"), py::arg("b"), py::arg("order") = default_quadrature_order);
    m.def("node_positions", &node_positions, py::arg("state"));
    m.def("node_count", &node_count, py::arg("state"));

    // finite-difference oracle
    py::class_<OracleReport>(m, "OracleReport")
        .def_readonly("closed_form", &OracleReport::closed_form)
        .def_readonly("oracle_value", &OracleReport::oracle_value)
        .def_readonly("rel_err", &OracleReport::rel_err)
        .def_property_readonly("grid_points", [](OracleReport const& r) { return r.grid_used.points; })
        .def_property_readonly("r_max", [](OracleReport const& r) { return r.grid_used.r_max; })
        .def_readonly("refinements", &OracleReport::refinements)
        .def_readonly("r2_closed_form", &OracleReport::r2_closed_form)
        .def_readonly("r2_oracle", &OracleReport::r2_oracle)
        .def_readonly("r2_rel_err", &OracleReport::r2_rel_err)
        .def_readonly("T_physical", &OracleReport::T_physical);
    m.def("verify_energy", &verify_energy, py::arg("q"), py::arg("units"), py::arg("field"), py::arg("tol") = 1e-6);
    m.def(
        "fd_eigenvalues",
        [](std::function<double(double)> const& V, double r_max, int points, int count) {
            return fd_eigensolve(V, make_grid(r_max, points), count).eigenvalues;
        },
        py::arg("potential"), py::arg("r_max"), py::arg("points"), py::arg("count"),
        "Lowest eigenvalues of -(1/2) u'' + V(r) u on (0, r_max).");

    m.def("format_sig6", &app::format_sig6, py::arg("value"));
}
