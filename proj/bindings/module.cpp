#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <tuple>
#include <vector>

#include "oamphase/angmom.hpp"
#include "oamphase/fieldsynth.hpp"
#include "oamphase/modes.hpp"
#include "oamphase/phasespace.hpp"
#include "oamphase/poincare.hpp"
#include "oamphase/special.hpp"
#include "oamphase/verify.hpp"

namespace py = pybind11;

namespace {

using AmplitudeTuple = std::tuple<int, int, int, double, std::complex<double>>;

std::vector<oam::angmom::Amplitude> to_amplitudes(const std::vector<AmplitudeTuple>& entries) {
  std::vector<oam::angmom::Amplitude> out;
  out.reserve(entries.size());
  for (const auto& [sigma, l, p, k0, value] : entries) out.push_back({sigma, l, p, k0, value});
  return out;
}

oam::phasespace::PhaseSpacePoint to_point(double x, double y, double px, double py) {
  return {x, y, px, py};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Structured-light phase-space toolkit: Laguerre-Gauss mode spheres, their rotations, "
      "Wigner functions, and angular-momentum accounting";

  py::class_<oam::modes::BeamFrame>(m, "BeamFrame")
      .def(py::init<double, double>(), py::arg("w0"), py::arg("k0"))
      .def_readonly("w0", &oam::modes::BeamFrame::w0)
      .def_readonly("k0", &oam::modes::BeamFrame::k0)
      .def_property_readonly("z0", &oam::modes::BeamFrame::z0)
      .def_property_readonly("lambda_bar", &oam::modes::BeamFrame::lambda_bar)
      .def_property_readonly("paraxiality", &oam::modes::BeamFrame::paraxiality)
      .def("__repr__", [](const oam::modes::BeamFrame& f) {
        return "BeamFrame(w0=" + std::to_string(f.w0) + ", k0=" + std::to_string(f.k0) + ")";
      });

  py::class_<oam::modes::ModeIndex>(m, "ModeIndex")
      .def(py::init<int, int>(), py::arg("l"), py::arg("p"))
      .def_readonly("l", &oam::modes::ModeIndex::l)
      .def_readonly("p", &oam::modes::ModeIndex::p)
      .def_property_readonly("order", &oam::modes::ModeIndex::order)
      .def("__repr__", [](const oam::modes::ModeIndex& mi) {
        return "ModeIndex(l=" + std::to_string(mi.l) + ", p=" + std::to_string(mi.p) + ")";
      });

  m.def("lg_position", &oam::modes::lg_position, py::arg("mode"), py::arg("frame"), py::arg("r"),
        py::arg("varphi"), py::arg("z") = 0.0,
        "Laguerre-Gauss amplitude at cylinder coordinates (r, varphi, z)");
  m.def("lg_momentum", &oam::modes::lg_momentum, py::arg("mode"), py::arg("frame"), py::arg("rho"),
        py::arg("varphi"),
        "Fourier-plane Laguerre-Gauss amplitude at transverse wavenumber (rho, varphi)");
  m.def("hg_position", &oam::modes::hg_position, py::arg("nx"), py::arg("ny"), py::arg("frame"),
        py::arg("x"), py::arg("y"), py::arg("z") = 0.0, "Hermite-Gauss amplitude at (x, y, z)");

  py::class_<oam::poincare::SphereState>(m, "SphereState")
      .def_readonly("mode", &oam::poincare::SphereState::mode)
      .def_readonly("theta", &oam::poincare::SphereState::theta)
      .def_readonly("phi", &oam::poincare::SphereState::phi)
      .def_readonly("coeffs", &oam::poincare::SphereState::coeffs)
      .def_property_readonly("order", &oam::poincare::SphereState::order)
      .def("__repr__", [](const oam::poincare::SphereState& s) {
        return "SphereState(l=" + std::to_string(s.mode.l) + ", p=" + std::to_string(s.mode.p) +
               ", theta=" + std::to_string(s.theta) + ", phi=" + std::to_string(s.phi) + ")";
      });

  m.def("rotate", &oam::poincare::rotate, py::arg("mode"), py::arg("theta"), py::arg("phi"),
        py::arg("frame"), "Sphere state at (theta, phi) on the order shell of the pole mode");
  m.def(
      "build_generators",
      [](int order, const oam::modes::BeamFrame& frame) {
        const auto g = oam::poincare::build_generators(order, frame);
        return py::make_tuple(g.Lx, g.Ly, g.Lz);
      },
      py::arg("order"), py::arg("frame"),
      "The three generator matrices (Lx, Ly, Lz) on an order shell");
  m.def("rotation_matrix", &oam::poincare::rotation_matrix, py::arg("order"), py::arg("theta"),
        py::arg("phi"), py::arg("frame"));
  m.def(
      "synthesize_field",
      [](const oam::poincare::SphereState& state, const oam::modes::BeamFrame& frame, double extent,
         int n, double z) {
        const oam::modes::GridSpec grid{extent, n, n, z};
        const auto field = oam::poincare::synthesize_field(state, frame, grid);
        Eigen::MatrixXcd out(grid.ny, grid.nx);
        for (int iy = 0; iy < grid.ny; ++iy)
          for (int ix = 0; ix < grid.nx; ++ix) out(iy, ix) = field.at(ix, iy);
        return out;
      },
      py::arg("state"), py::arg("frame"), py::arg("extent"), py::arg("n"), py::arg("z") = 0.0,
      "Sample the state on an n x n grid over [-extent, extent]^2; row 0 is the top");

  m.def(
      "wigner_closed",
      [](const oam::poincare::SphereState& state, double x, double y, double px, double py,
         const oam::modes::BeamFrame& frame) {
        return oam::phasespace::wigner_closed(state, to_point(x, y, px, py), frame);
      },
      py::arg("state"), py::arg("x"), py::arg("y"), py::arg("px"), py::arg("py"), py::arg("frame"),
      "Closed-form Wigner function at the phase-space point (x, y, px, py)");
  m.def(
      "wigner_oracle",
      [](const oam::poincare::SphereState& state, double x, double y, double px, double py,
         const oam::modes::BeamFrame& frame, double radius, int nodes) {
        const auto quad = oam::special::build_quadrature(radius, nodes);
        return oam::phasespace::wigner_oracle(state, to_point(x, y, px, py), frame, quad);
      },
      py::arg("state"), py::arg("x"), py::arg("y"), py::arg("px"), py::arg("py"), py::arg("frame"),
      py::arg("radius"), py::arg("nodes") = 128,
      "Brute-force Wigner transform by chord-variable quadrature");
  m.def(
      "transfer_matrix",
      [](double theta, double phi, const oam::modes::BeamFrame& frame) {
        return oam::phasespace::transfer_matrix(theta, phi, frame).matrix;
      },
      py::arg("theta"), py::arg("phi"), py::arg("frame"),
      "Symplectic ray matrix of the sphere rotation, acting on (x, y, px, py)");
  m.def(
      "quadratic_forms",
      [](double x, double y, double px, double py, const oam::modes::BeamFrame& frame) {
        const auto q = oam::phasespace::quadratic_forms(to_point(x, y, px, py), frame);
        return py::make_tuple(q.Q0, q.Q);
      },
      py::arg("x"), py::arg("y"), py::arg("px"), py::arg("py"), py::arg("frame"),
      "The scalar Q0 and vector Q entering the closed-form Wigner function");
  m.def("overlap", &oam::phasespace::overlap, py::arg("a"), py::arg("b"),
        "Squared overlap |<a|b>|^2 of two sphere states (same pole labels)");
  m.def("overlap_tau", &oam::phasespace::overlap_tau, py::arg("theta_a"), py::arg("phi_a"),
        py::arg("theta_b"), py::arg("phi_b"));
  m.def("expectation_L", &oam::phasespace::expectation_L, py::arg("state"), py::arg("frame"),
        "Mean generator vector (l/2) u_r, cross-checked between two routes");

  m.def(
      "dispersion_k0",
      [](double qx, double qy, double kz) {
        return oam::fieldsynth::dispersion_k0({qx, qy, kz});
      },
      py::arg("qx"), py::arg("qy"), py::arg("kz"),
      "Carrier wavenumber whose paraxial shell passes through the wave vector");
  py::class_<oam::fieldsynth::PolarizationVector>(m, "PolarizationVector")
      .def_readonly("sigma", &oam::fieldsynth::PolarizationVector::sigma)
      .def_readonly("components", &oam::fieldsynth::PolarizationVector::components)
      .def_readonly("varphi", &oam::fieldsynth::PolarizationVector::varphi)
      .def("cartesian", &oam::fieldsynth::PolarizationVector::cartesian);
  m.def("polarization", &oam::fieldsynth::polarization, py::arg("sigma"), py::arg("q"),
        py::arg("varphi"), py::arg("k0"),
        "Helicity polarization vector in the local (u_rho, u_phi, u_z) frame");

  py::class_<oam::angmom::AmplitudeSet>(m, "AmplitudeSet")
      .def_static(
          "classical",
          [](const std::vector<AmplitudeTuple>& entries) {
            return oam::angmom::AmplitudeSet::classical(to_amplitudes(entries));
          },
          py::arg("entries"), "Entries are (sigma, l, p, k0, amplitude) tuples")
      .def_static(
          "one_photon",
          [](const std::vector<AmplitudeTuple>& entries) {
            return oam::angmom::AmplitudeSet::one_photon(to_amplitudes(entries));
          },
          py::arg("entries"), "Entries are (sigma, l, p, k0, amplitude) tuples; weights must sum to 1")
      .def_property_readonly("weight", &oam::angmom::AmplitudeSet::weight);
  m.def("orbital_z", &oam::angmom::orbital_z);
  m.def("spin_z", &oam::angmom::spin_z);
  m.def("paraxial_energy", &oam::angmom::paraxial_energy);
  m.def("oam_per_energy", &oam::angmom::oam_per_energy);

  m.def("laguerre", &oam::special::laguerre, py::arg("p"), py::arg("alpha"), py::arg("x"),
        "Generalized Laguerre polynomial L_p^alpha(x)");

  m.def(
      "verify_report",
      [](const std::string& suite, std::uint64_t seed, double tol_scale,
         const oam::modes::BeamFrame& frame) {
        return oam::verify::report_json(oam::verify::run_suite(suite, seed, tol_scale, frame));
      },
      py::arg("suite") = "all", py::arg("seed") = 0, py::arg("tol_scale") = 1.0,
      py::arg("frame") = oam::modes::BeamFrame(1.0, 2.0),
      "Run a named invariant suite and return its JSON report");
  m.def("suite_names", &oam::verify::suite_names);
}
