// pybind11 surface for the core pipeline: lattice/resonance queries,
// bifurcation coefficients and amplitudes, synthesis, and residual checks.
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bsw/bifurcation.hpp"
#include "bsw/lattice.hpp"
#include "bsw/linop.hpp"
#include "bsw/presets.hpp"
#include "bsw/spectral.hpp"
#include "bsw/synthesis.hpp"
#include "bsw/verify.hpp"

namespace py = pybind11;
using namespace bsw;

namespace {

py::dict field_to_dict(const Field& f) {
    py::dict d;
    for (const auto& [idx, c] : f)
        d[py::make_tuple(idx.n1, idx.n2, idx.q)] = py::make_tuple(c.g, c.f1, c.f2);
    return d;
}

Field field_from_dict(const py::dict& d) {
    Field f;
    for (const auto& item : d) {
        const auto key = item.first.cast<std::tuple<int, int, int>>();
        const auto val = item.second.cast<std::tuple<Complex, Complex, Complex>>();
        f[{std::get<0>(key), std::get<1>(key), std::get<2>(key)}] =
            Coeff{std::get<0>(val), std::get<1>(val), std::get<2>(val)};
    }
    return f;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "bifurcating standing waves of a 2-D Boussinesq system";

    py::class_<LatticeConfig>(m, "LatticeConfig")
        .def(py::init<double, double, double, double, double>(), py::arg("omega"),
             py::arg("k1"), py::arg("k2"), py::arg("tau1"), py::arg("tau2"))
        .def_readwrite("omega", &LatticeConfig::omega)
        .def_readwrite("k1", &LatticeConfig::k1)
        .def_readwrite("k2", &LatticeConfig::k2)
        .def_readwrite("tau1", &LatticeConfig::tau1)
        .def_readwrite("tau2", &LatticeConfig::tau2)
        .def("validate", &LatticeConfig::validate);

    py::class_<ModeIndex>(m, "ModeIndex")
        .def(py::init<int, int, int>(), py::arg("n1"), py::arg("n2"), py::arg("q"))
        .def_readwrite("n1", &ModeIndex::n1)
        .def_readwrite("n2", &ModeIndex::n2)
        .def_readwrite("q", &ModeIndex::q)
        .def("__repr__", [](const ModeIndex& i) {
            return "ModeIndex(" + std::to_string(i.n1) + ", " + std::to_string(i.n2) +
                   ", " + std::to_string(i.q) + ")";
        });

    py::class_<BranchPoint>(m, "BranchPoint")
        .def_readonly("cfg", &BranchPoint::cfg)
        .def_readonly("beta0", &BranchPoint::beta0)
        .def_readonly("q", &BranchPoint::q);

    py::class_<BifurcationCoefficients>(m, "BifurcationCoefficients")
        .def_readonly("a1", &BifurcationCoefficients::a1)
        .def_readonly("a2", &BifurcationCoefficients::a2)
        .def_readonly("a3", &BifurcationCoefficients::a3)
        .def_readonly("a4", &BifurcationCoefficients::a4)
        .def_readonly("b1", &BifurcationCoefficients::b1)
        .def_readonly("b2", &BifurcationCoefficients::b2)
        .def_readonly("b3", &BifurcationCoefficients::b3)
        .def_readonly("b4", &BifurcationCoefficients::b4)
        .def_readonly("b5", &BifurcationCoefficients::b5)
        .def_readonly("b6", &BifurcationCoefficients::b6)
        .def_readonly("d1", &BifurcationCoefficients::d1)
        .def_readonly("d2", &BifurcationCoefficients::d2);

    py::class_<CubicCoefficients>(m, "CubicCoefficients")
        .def_readonly("l1", &CubicCoefficients::l1)
        .def_readonly("l2", &CubicCoefficients::l2)
        .def_readonly("l3", &CubicCoefficients::l3)
        .def_readonly("variant", &CubicCoefficients::variant);

    py::class_<Amplitudes>(m, "Amplitudes")
        .def_readonly("A1_sq", &Amplitudes::A1_sq)
        .def_readonly("A2_sq", &Amplitudes::A2_sq)
        .def_readonly("mu", &Amplitudes::mu)
        .def_readonly("C", &Amplitudes::C)
        .def("A1", &Amplitudes::A1)
        .def("A2", &Amplitudes::A2);

    py::class_<ResidualReport>(m, "ResidualReport")
        .def_readonly("mu", &ResidualReport::mu)
        .def_readonly("eta_norm", &ResidualReport::eta_norm)
        .def_readonly("v_norm", &ResidualReport::v_norm)
        .def("total", &ResidualReport::total);

    py::class_<OrderFit>(m, "OrderFit")
        .def_readonly("slope", &OrderFit::slope)
        .def_readonly("intercept", &OrderFit::intercept)
        .def_readonly("r_squared", &OrderFit::r_squared)
        .def_readonly("mu_samples", &OrderFit::mu_samples)
        .def_readonly("residuals", &OrderFit::residuals);

    py::class_<StandingWaveSolution>(m, "StandingWaveSolution")
        .def_readonly("bp", &StandingWaveSolution::bp)
        .def_readonly("mu", &StandingWaveSolution::mu)
        .def_readonly("C", &StandingWaveSolution::C)
        .def_readonly("A1", &StandingWaveSolution::A1)
        .def_readonly("A2", &StandingWaveSolution::A2)
        .def_readonly("order", &StandingWaveSolution::order)
        .def("modes", [](const StandingWaveSolution& s) { return field_to_dict(s.field); });

    py::class_<FigurePreset>(m, "FigurePreset")
        .def_readonly("figure", &FigurePreset::figure)
        .def_readonly("cfg", &FigurePreset::cfg)
        .def_readonly("beta0", &FigurePreset::beta0)
        .def_readonly("q", &FigurePreset::q)
        .def_readonly("mu", &FigurePreset::mu)
        .def_readonly("C", &FigurePreset::C)
        .def_readonly("published_A1", &FigurePreset::published_A1)
        .def_readonly("published_A2", &FigurePreset::published_A2)
        .def_readonly("note", &FigurePreset::note);

    m.def("figure_preset", &figure_preset, py::arg("figure"),
          py::arg("literal_fig5") = false);
    m.def("enumerate_resonance_set", &enumerate_resonance_set, py::arg("beta"),
          py::arg("cfg"), py::arg("eps_res") = 1e-9);
    m.def("operator_bound", &operator_bound, py::arg("beta"), py::arg("cfg"),
          py::arg("eps_res") = 1e-9);
    m.def("validate_branch_point", &validate_branch_point, py::arg("cfg"),
          py::arg("beta0"), py::arg("q"), py::arg("eps_res") = 1e-9);
    m.def("second_order_coefficients", &second_order_coefficients, py::arg("bp"));
    m.def("cubic_coefficients", &cubic_coefficients, py::arg("bp"), py::arg("co"));
    m.def("solve_amplitudes", &solve_amplitudes, py::arg("bp"), py::arg("ls"),
          py::arg("mu"), py::arg("C"));
    m.def(
        "synthesize",
        [](const BranchPoint& bp, const Amplitudes& amps,
           std::pair<double, double> sigma, int order) {
            return synthesize(bp, amps, {sigma.first, sigma.second}, order);
        },
        py::arg("bp"), py::arg("amps"),
        py::arg("sigma") = std::pair<double, double>{0.0, 0.0}, py::arg("order") = 2);
    m.def("nonlinear_residual", &nonlinear_residual, py::arg("sol"));
    m.def("order_fit", &order_fit, py::arg("bp"), py::arg("C"), py::arg("order"),
          py::arg("mu_list"));
    m.def("kernel_certificate",
          py::overload_cast<const BranchPoint&>(&kernel_certificate), py::arg("bp"));
    m.def("kernel_certificate",
          py::overload_cast<const BranchPoint&, double>(&kernel_certificate),
          py::arg("bp"), py::arg("beta_eval"));
    m.def(
        "evaluate_field",
        [](const py::dict& field, const LatticeConfig& cfg, double x1, double x2,
           double t) {
            const PointValue pv = evaluate(field_from_dict(field), cfg, x1, x2, t);
            return py::make_tuple(pv.eta, pv.v1, pv.v2);
        },
        py::arg("field"), py::arg("cfg"), py::arg("x1"), py::arg("x2"), py::arg("t"));
    m.def(
        "corollary_surface",
        [](const BranchPoint& bp, const Amplitudes& amps) {
            return field_to_dict(corollary_surface(bp, amps));
        },
        py::arg("bp"), py::arg("amps"));
}
