// python bindings for the core solver: parameter types, the alternating
// fixed-point solve, the two connector searches, closed-form oracles, and
// wavefunction profiles.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zgkn/omega_system.hpp"
#include "zgkn/oracles.hpp"
#include "zgkn/params.hpp"
#include "zgkn/solver.hpp"
#include "zgkn/theta_system.hpp"
#include "zgkn/wavefunction.hpp"

namespace py = pybind11;
using namespace zgkn;

PYBIND11_MODULE(_zgkn, m) {
  m.doc() = "bound states of the ring-singularity Dirac problem via cylinder connectors";

  m.attr("alpha_fs") = alpha_fs;
  m.attr("a_ring_max") = a_ring_max;
  m.attr("gamma_floor") = gamma_floor;

  py::class_<ModelParams>(m, "ModelParams")
      .def(py::init<>())
      .def(py::init([](double a, double gamma, double kappa) {
             return ModelParams{a, gamma, kappa};
           }),
           py::arg("a"), py::arg("gamma"), py::arg("kappa"))
      .def_readwrite("a", &ModelParams::a)
      .def_readwrite("gamma", &ModelParams::gamma)
      .def_readwrite("kappa", &ModelParams::kappa)
      .def("__repr__", [](const ModelParams& p) {
        return "ModelParams(a=" + std::to_string(p.a) + ", gamma=" + std::to_string(p.gamma) +
               ", kappa=" + std::to_string(p.kappa) + ")";
      });

  py::class_<WindingTarget>(m, "WindingTarget")
      .def(py::init<>())
      .def(py::init([](int n_theta, int n_omega) {
             return WindingTarget{n_theta, n_omega};
           }),
           py::arg("n_theta"), py::arg("n_omega"))
      .def_readwrite("n_theta", &WindingTarget::n_theta)
      .def_readwrite("n_omega", &WindingTarget::n_omega);

  py::class_<SpectroLabel>(m, "SpectroLabel")
      .def_readonly("n", &SpectroLabel::n)
      .def_readonly("ell", &SpectroLabel::ell)
      .def_readonly("j", &SpectroLabel::j)
      .def_readonly("m_j", &SpectroLabel::m_j)
      .def_readonly("k", &SpectroLabel::k)
      .def_readonly("M", &SpectroLabel::M)
      .def_readonly("N", &SpectroLabel::N)
      .def_readonly("text", &SpectroLabel::text)
      .def("__repr__", [](const SpectroLabel& l) { return "SpectroLabel(" + l.text + ")"; });

  py::class_<ValidationReport>(m, "ValidationReport")
      .def_readonly("accepted", &ValidationReport::accepted)
      .def_readonly("in_guaranteed_region", &ValidationReport::in_guaranteed_region)
      .def_readonly("reason", &ValidationReport::reason);

  py::class_<BoundState>(m, "BoundState")
      .def_readonly("converged", &BoundState::converged)
      .def_readonly("E", &BoundState::E)
      .def_readonly("lambda_", &BoundState::lambda)
      .def_readonly("params", &BoundState::params)
      .def_readonly("target", &BoundState::target)
      .def_readonly("label", &BoundState::label)
      .def_readonly("iterations", &BoundState::iterations)
      .def_readonly("residual_E", &BoundState::residual_E)
      .def_readonly("residual_lambda", &BoundState::residual_lambda)
      .def_readonly("contraction_ratio", &BoundState::contraction_ratio)
      .def_readonly("in_guaranteed_region", &BoundState::in_guaranteed_region)
      .def_readonly("error", &BoundState::error);

  py::class_<ConnectorResult>(m, "ConnectorResult")
      .def_readonly("converged", &ConnectorResult::converged)
      .def_readonly("mu_star", &ConnectorResult::mu_star)
      .def_readonly("winding", &ConnectorResult::winding)
      .def_readonly("iterations", &ConnectorResult::iterations)
      .def_readonly("terminal_lift", &ConnectorResult::terminal_lift)
      .def_readonly("error", &ConnectorResult::error);

  py::class_<RadialSamples>(m, "RadialSamples")
      .def_readonly("r", &RadialSamples::r)
      .def_readonly("ln_amp", &RadialSamples::ln_amp)
      .def_readonly("amp", &RadialSamples::amp)
      .def_readonly("phase", &RadialSamples::phase)
      .def_readonly("norm", &RadialSamples::norm)
      .def_readonly("ok", &RadialSamples::ok)
      .def_readonly("error", &RadialSamples::error);

  py::class_<AngularSamples>(m, "AngularSamples")
      .def_readonly("theta", &AngularSamples::theta)
      .def_readonly("ln_amp", &AngularSamples::ln_amp)
      .def_readonly("amp", &AngularSamples::amp)
      .def_readonly("phase", &AngularSamples::phase)
      .def_readonly("norm", &AngularSamples::norm)
      .def_readonly("pole_exponent", &AngularSamples::pole_exponent)
      .def_readonly("ok", &AngularSamples::ok)
      .def_readonly("error", &AngularSamples::error);

  py::class_<WaveProfile>(m, "WaveProfile")
      .def_readonly("radial", &WaveProfile::radial)
      .def_readonly("angular", &WaveProfile::angular)
      .def_readonly("density", &WaveProfile::density)
      .def_readonly("peak_r", &WaveProfile::peak_r)
      .def_readonly("peak_density", &WaveProfile::peak_density)
      .def_readonly("ok", &WaveProfile::ok)
      .def_readonly("error", &WaveProfile::error);

  m.def("gamma_from_Z", &gamma_from_Z, py::arg("Z"),
        "coupling gamma = -Z * alpha for a charge number Z");
  m.def("validate", &validate, py::arg("params"), py::arg("target"),
        "admissibility report for a parameter set and winding pair");
  m.def(
      "label",
      [](int n_theta, int n_omega, double kappa) {
        return spectroscopic_label({n_theta, n_omega}, kappa);
      },
      py::arg("n_theta"), py::arg("n_omega"), py::arg("kappa"),
      "spectroscopic label of a winding target; raises ValueError when inadmissible");
  m.def("solve", &solve_pair, py::arg("params"), py::arg("target"), py::arg("tol") = 1e-8,
        py::arg("max_iter") = 40,
        "alternating fixed point of the angular and radial connector searches");
  m.def(
      "find_lambda",
      [](const ModelParams& p, double E, int n_theta, double tol) {
        return find_lambda({p, E}, n_theta, tol);
      },
      py::arg("params"), py::arg("E"), py::arg("n_theta"), py::arg("tol") = 1e-9,
      "angular eigenvalue: bisection for the level-n_theta connector at fixed E");
  m.def(
      "find_E",
      [](const ModelParams& p, double lambda, int n_omega, double tol) {
        return find_E({p, lambda}, n_omega, tol);
      },
      py::arg("params"), py::arg("lambda_"), py::arg("n_omega"), py::arg("tol") = 1e-9,
      "energy: bisection for the level-n_omega radial connector at fixed lambda");
  m.def(
      "sommerfeld_energy",
      [](int M, int k, double gamma) {
        return sommerfeld_energy({M, k, gamma});
      },
      py::arg("M"), py::arg("k"), py::arg("gamma"),
      "closed-form fine-structure energy; raises ValueError on forbidden indices");
  m.def("bsw_lambda", &bsw_lambda, py::arg("kappa"), py::arg("N"), py::arg("a"), py::arg("E"),
        "small-ring double power series for the angular eigenvalue of level N");
  m.def("a0_angular_k", &a0_angular_k, py::arg("N"), py::arg("kappa"),
        "integer angular eigenvalue at a = 0");
  m.def("jacobi_theta_final", &jacobi_theta_final, py::arg("N"), py::arg("kappa"),
        "terminal lifted phase of the level-N angular connector at a = 0");
  m.def("wave_profile", &wave_profile, py::arg("state"), py::arg("n_r") = 801,
        py::arg("n_theta") = 801, py::arg("r_max") = 0.0,
        "normalized radial and angular amplitude profiles with the equatorial density");
}
