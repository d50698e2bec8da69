#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qhj/contour.hpp"
#include "qhj/figure.hpp"
#include "qhj/riccati.hpp"
#include "qhj/systems.hpp"

namespace py = pybind11;
using namespace qhj;

namespace {

const char* kind_name(PoleKind k) {
  switch (k) {
    case PoleKind::Node: return "node";
    case PoleKind::Boundary: return "boundary";
    case PoleKind::Origin: return "origin";
  }
  return "?";
}

}  // namespace

PYBIND11_MODULE(_qhj, m) {
  m.doc() = "Momentum functions, contour-integrated action variables and "
            "node reports for the 3D harmonic oscillator and hydrogen atom "
            "(adimensional variables, hbar = 1)";

  py::class_<RootSet>(m, "RootSet")
      .def_readonly("roots", &RootSet::roots)
      .def_readonly("refined_residual", &RootSet::refined_residual)
      .def("__len__", [](const RootSet& r) { return r.roots.size(); });

  py::class_<OrthoPoly>(m, "OrthoPoly",
                        "Hermite / reduced associated Legendre / associated "
                        "Laguerre polynomial with recurrence evaluation")
      .def_static("hermite", &OrthoPoly::hermite, py::arg("n"))
      .def_static("reduced_legendre", &OrthoPoly::reduced_legendre,
                  py::arg("ell"), py::arg("m_abs"))
      .def_static("laguerre", &OrthoPoly::laguerre, py::arg("n"), py::arg("alpha"))
      .def_property_readonly("degree", &OrthoPoly::degree)
      .def("__call__", &OrthoPoly::eval, py::arg("z"))
      .def("derivative", &OrthoPoly::eval_derivative, py::arg("z"))
      .def("second_derivative", &OrthoPoly::eval_second_derivative, py::arg("z"))
      .def("roots", &OrthoPoly::roots);

  py::class_<Pole>(m, "Pole")
      .def_readonly("location", &Pole::location)
      .def_readonly("residue", &Pole::residue)
      .def_property_readonly("kind", [](const Pole& p) { return kind_name(p.kind); })
      .def("__repr__", [](const Pole& p) {
        return "<Pole " + std::string(kind_name(p.kind)) + " at (" +
               std::to_string(p.location.real()) + ", " +
               std::to_string(p.location.imag()) + ")>";
      });

  py::class_<RiccatiCoefficients>(m, "RiccatiCoefficients")
      .def("P", [](const RiccatiCoefficients& c, Complex z) { return c.P(z); }, py::arg("q"))
      .def("Q", [](const RiccatiCoefficients& c, Complex z) { return c.Q(z); }, py::arg("q"))
      .def("R", [](const RiccatiCoefficients& c, Complex z) { return c.R(z); }, py::arg("q"))
      .def_readonly("domain_lo", &RiccatiCoefficients::domain_lo)
      .def_readonly("domain_hi", &RiccatiCoefficients::domain_hi);

  py::class_<MomentumFunction>(m, "MomentumFunction",
                               "Per-coordinate complex momentum function with "
                               "its exact pole set")
      .def("__call__", [](const MomentumFunction& p, Complex z) { return p.evaluate(z); },
           py::arg("z"))
      .def("derivative", [](const MomentumFunction& p, Complex z) { return p.derivative(z); },
           py::arg("z"))
      .def_readonly("label", &MomentumFunction::label)
      .def_readonly("poles", &MomentumFunction::poles)
      .def_readonly("riccati", &MomentumFunction::riccati)
      .def_readonly("numerator_zeros", &MomentumFunction::numerator_zeros)
      .def_readonly("action_target", &MomentumFunction::action_target)
      .def_readonly("domain_lo", &MomentumFunction::domain_lo)
      .def_readonly("domain_hi", &MomentumFunction::domain_hi);

  m.def("ho_momentum", &ho_momentum, py::arg("n"),
        "Oscillator momentum function -i[xi - H_{n+1}/H_n]");
  m.def("hydrogen_p_phi", &hydrogen_p_phi, py::arg("m"));
  m.def("hydrogen_p_x", &hydrogen_p_x, py::arg("ell"), py::arg("m"));
  m.def("hydrogen_p_rho", &hydrogen_p_rho, py::arg("n"), py::arg("ell"));
  m.def("hydrogen_p_theta", &hydrogen_p_theta, py::arg("p_x"), py::arg("theta"),
        "theta-form evaluation sin(theta) p_x(cos theta)");

  py::class_<WaveFunction>(m, "WaveFunction")
      .def("__call__", [](const WaveFunction& w, double q) { return w.value(q); }, py::arg("q"))
      .def("derivative", [](const WaveFunction& w, double q) { return w.derivative(q); },
           py::arg("q"));
  m.def("ho_wave", &ho_wave, py::arg("n"));
  m.def("hydrogen_wave_phi", &hydrogen_wave_phi, py::arg("m"));
  m.def("hydrogen_wave_x", &hydrogen_wave_x, py::arg("ell"), py::arg("m"));
  m.def("hydrogen_wave_rho", &hydrogen_wave_rho, py::arg("n"), py::arg("ell"));

  m.def("log_derivative_oracle",
        [](const std::function<Complex(double)>& u,
           const std::function<Complex(double)>& du, const ComplexFn& R, double q) {
          return log_derivative_oracle(u, du, R, q);
        },
        py::arg("u"), py::arg("u_derivative"), py::arg("R"), py::arg("q"),
        "-(1/R) u'/u, the wave-function-side reconstruction of p");

  py::class_<ResidualReport>(m, "ResidualReport")
      .def_readonly("grid", &ResidualReport::grid)
      .def_readonly("residuals", &ResidualReport::residuals)
      .def_readonly("sup_norm", &ResidualReport::sup_norm);
  m.def("riccati_residual",
        [](const MomentumFunction& p, const std::vector<double>& grid) {
          return riccati_residual(p.riccati, p, grid);
        },
        py::arg("p"), py::arg("grid"),
        "Substitute p into its own Riccati equation on a real grid");

  py::class_<Contour>(m, "Contour")
      .def(py::init([](Complex center, double rx, double ry, int samples) {
             return Contour{center, rx, ry, samples};
           }),
           py::arg("center") = Complex{0.0, 0.0}, py::arg("radius_x") = 1.0,
           py::arg("radius_y") = 1.0, py::arg("samples") = 32)
      .def_readwrite("center", &Contour::center)
      .def_readwrite("radius_x", &Contour::radius_x)
      .def_readwrite("radius_y", &Contour::radius_y)
      .def_readwrite("samples", &Contour::samples);

  py::class_<QuadratureResult>(m, "QuadratureResult")
      .def_readonly("value", &QuadratureResult::value)
      .def_readonly("samples_used", &QuadratureResult::samples_used)
      .def_readonly("converged", &QuadratureResult::converged);
  m.def("integrate_closed", &integrate_closed, py::arg("f"), py::arg("contour"),
        "Trapezoid quadrature of a closed contour integral with sample doubling");

  py::class_<ActionResult>(m, "ActionResult")
      .def_readonly("J_over_hbar", &ActionResult::J_over_hbar)
      .def_readonly("target", &ActionResult::target)
      .def_readonly("deviation", &ActionResult::deviation)
      .def_readonly("samples_used", &ActionResult::samples_used)
      .def_readonly("converged", &ActionResult::converged);
  m.def("action_variable",
        py::overload_cast<const MomentumFunction&, double>(&action_variable),
        py::arg("p"), py::arg("tol") = 1e-8);
  m.def("action_variable",
        py::overload_cast<const MomentumFunction&, const Contour&, double>(&action_variable),
        py::arg("p"), py::arg("contour"), py::arg("tol") = 1e-8);
  m.def("auto_contour", &auto_contour, py::arg("p"));

  m.def("residue_at",
        py::overload_cast<const ComplexFn&, Complex, double>(&residue_at),
        py::arg("f"), py::arg("pole"), py::arg("radius"));
  m.def("residue_at",
        py::overload_cast<const MomentumFunction&, Complex, double>(&residue_at),
        py::arg("p"), py::arg("pole"), py::arg("radius"));
  m.def("count_zeros_and_poles", &count_zeros_and_poles, py::arg("f"),
        py::arg("f_derivative"), py::arg("contour"),
        "Argument principle: zeros minus poles enclosed by the contour");

  py::class_<NodeReport>(m, "NodeReport")
      .def_readonly("nodes", &NodeReport::nodes)
      .def_readonly("antinodes", &NodeReport::antinodes)
      .def_readonly("net_winding", &NodeReport::net_winding)
      .def_readonly("counts_consistent", &NodeReport::counts_consistent);
  m.def("nodes_and_antinodes", &nodes_and_antinodes, py::arg("p"));

  py::class_<Spectrum>(m, "Spectrum")
      .def_readonly("energy", &Spectrum::energy)
      .def_readonly("actions", &Spectrum::actions)
      .def_readonly("angles", &Spectrum::angles);
  m.def("ho_spectrum",
        [](std::array<int, 3> n, std::array<double, 3> omega, double hbar) {
          return ho_spectrum({n, omega}, hbar);
        },
        py::arg("n"), py::arg("omega") = std::array<double, 3>{1.0, 1.0, 1.0},
        py::arg("hbar") = 1.0);
  m.def("hydrogen_spectrum",
        [](int n, int ell, int mm, double mass, double k, double hbar) {
          return hydrogen_spectrum({n, ell, mm, mass, k}, hbar);
        },
        py::arg("n"), py::arg("ell") = 0, py::arg("m") = 0, py::arg("mass") = 1.0,
        py::arg("k") = 1.0, py::arg("hbar") = 1.0);
  m.def("hydrogen_energy_of_action", &hydrogen_energy_of_action, py::arg("J_r"),
        py::arg("mass") = 1.0, py::arg("k") = 1.0, py::arg("hbar") = 1.0);
  m.def("hydrogen_radial_frequency", &hydrogen_radial_frequency, py::arg("J_r"),
        py::arg("mass") = 1.0, py::arg("k") = 1.0, py::arg("hbar") = 1.0);
}
