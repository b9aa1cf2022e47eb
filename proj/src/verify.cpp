#include "oamphase/verify.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "json.hpp"
#include "oamphase/angmom.hpp"
#include "oamphase/phasespace.hpp"
#include "oamphase/poincare.hpp"
#include "oamphase/rng.hpp"
#include "oamphase/special.hpp"

namespace oam::verify {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct SuiteBuilder {
  SuiteReport report;
  double tol_scale;

  void add(const std::string& name, double residual, double tol) {
    tol *= tol_scale;
    report.checks.push_back({name, residual, tol, residual <= tol});
    report.max_residual = std::max(report.max_residual, residual);
    report.pass = report.pass && report.checks.back().pass;
  }
};

std::complex<double> field_inner(modes::ModeIndex a, modes::ModeIndex b, const modes::BeamFrame& frame,
                                 double z, const special::Quadrature2D& quad) {
  std::complex<double> acc = 0.0;
  for (std::size_t i = 0; i < quad.size(); ++i) {
    double r = std::hypot(quad.x[i], quad.y[i]);
    double phi = std::atan2(quad.y[i], quad.x[i]);
    acc += quad.w[i] * std::conj(lg_position(a, frame, r, phi, z)) * lg_position(b, frame, r, phi, z);
  }
  return acc;
}

SuiteReport suite_modes(std::uint64_t, double tol_scale, const modes::BeamFrame& frame) {
  SuiteBuilder b{{"modes", {}, 0.0, true}, tol_scale};

  const std::vector<modes::ModeIndex> shell = {{0, 0}, {1, 0}, {-1, 0}, {2, 0}, {-2, 0}, {0, 1}};
  auto quad = special::build_quadrature(6.0 * frame.w0 * std::sqrt(3.0), 96);
  double worst = 0.0;
  for (std::size_t i = 0; i < shell.size(); ++i)
    for (std::size_t j = i; j < shell.size(); ++j) {
      double expected = (i == j) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(field_inner(shell[i], shell[j], frame, 0.0, quad) - expected));
    }
  b.add("lg_orthonormality_order_le_2", worst, 1e-8);

  double gouy = std::arg(lg_position({0, 0}, frame, 0.0, 0.0, frame.z0()));
  b.add("gouy_phase_at_rayleigh_range", std::abs(gouy + kPi / 4.0), 1e-12);

  double norm_worst = 0.0;
  for (double z : {frame.z0(), 5.0 * frame.z0()}) {
    double wz = frame.w0 * std::sqrt(1.0 + (z / frame.z0()) * (z / frame.z0()));
    auto zq = special::build_quadrature(6.0 * wz * 2.0, 128);
    norm_worst = std::max(norm_worst, std::abs(field_inner({1, 1}, {1, 1}, frame, z, zq) - 1.0));
  }
  b.add("norm_invariance_under_propagation", norm_worst, 1e-8);

  {
    const modes::ModeIndex mode{1, 0};
    double rho = 0.8 / frame.w0, varphi = 0.6;
    std::complex<double> acc = 0.0;
    auto fq = special::build_quadrature(6.0 * frame.w0 * std::sqrt(2.0), 96);
    for (std::size_t i = 0; i < fq.size(); ++i) {
      double r = std::hypot(fq.x[i], fq.y[i]);
      double phi = std::atan2(fq.y[i], fq.x[i]);
      double dot = rho * (std::cos(varphi) * fq.x[i] + std::sin(varphi) * fq.y[i]);
      acc += fq.w[i] * lg_position(mode, frame, r, phi, 0.0) * std::exp(std::complex<double>(0.0, -dot));
    }
    acc /= 2.0 * kPi;
    b.add("fourier_pair_consistency", std::abs(acc - lg_momentum(mode, frame, rho, varphi)), 1e-8);
  }

  return b.report;
}

SuiteReport suite_symplectic(std::uint64_t seed, double tol_scale, const modes::BeamFrame& frame) {
  SuiteBuilder b{{"symplectic", {}, 0.0, true}, tol_scale};
  SeededRng rng(seed);
  const Eigen::Matrix4d metric = phasespace::symplectic_metric();
  const Eigen::Matrix4d id = Eigen::Matrix4d::Identity();

  double det_worst = 0.0, metric_worst = 0.0, inverse_worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    double theta = rng.uniform(0.0, kPi);
    double phi = rng.uniform(0.0, 2.0 * kPi);
    modes::BeamFrame f(frame.w0 * rng.uniform(0.5, 2.0), frame.k0 * rng.uniform(0.5, 2.0));
    auto t = phasespace::transfer_matrix(theta, phi, f);
    det_worst = std::max(det_worst, std::abs(t.matrix.determinant() - 1.0));
    metric_worst = std::max(
        metric_worst, (t.matrix * metric * t.matrix.transpose() - metric).cwiseAbs().maxCoeff());
    inverse_worst = std::max(inverse_worst, (t.matrix * t.inverse() - id).cwiseAbs().maxCoeff());
  }
  b.add("determinant_one", det_worst, 1e-12);
  b.add("metric_preserved", metric_worst, 1e-12);
  b.add("inverse_consistency", inverse_worst, 1e-12);

  double id_worst = 0.0;
  for (double phi : {0.0, 1.0, 2.5, 5.0})
    id_worst = std::max(id_worst,
                        (phasespace::transfer_matrix(0.0, phi, frame).matrix - id).cwiseAbs().maxCoeff());
  b.add("identity_at_zero_angle", id_worst, 1e-15);

  return b.report;
}

SuiteReport suite_wigner(std::uint64_t seed, double tol_scale, const modes::BeamFrame& frame) {
  SuiteBuilder b{{"wigner", {}, 0.0, true}, tol_scale};
  SeededRng rng(seed);
  const double lbar = frame.lambda_bar();
  const double natural = 1.0 / (kPi * kPi * lbar * lbar);

  {
    auto gauss = poincare::rotate({0, 0}, 0.0, 0.0, frame);
    double w = phasespace::wigner_closed(gauss, {}, frame);
    b.add("gaussian_peak_value", std::abs(w / natural - 1.0), 1e-12);
  }

  {
    double worst = 0.0;
    for (int n = 0; n <= 4; ++n) {
      auto state = poincare::rotate({n, 0}, 0.0, 0.0, frame);
      double w = phasespace::wigner_closed(state, {}, frame);
      worst = std::max(worst, std::abs(w / natural - ((n % 2 == 0) ? 1.0 : -1.0)));
    }
    b.add("origin_parity_values", worst, 1e-10);
  }

  {
    auto quad = special::build_quadrature(18.0 / (frame.w0 * frame.k0), 192);
    const std::vector<poincare::SphereState> states = {
        poincare::rotate({1, 0}, 0.0, 0.0, frame),
        poincare::rotate({2, 0}, kPi / 3.0, 1.1, frame),
        poincare::rotate({0, 1}, kPi / 2.0, 0.0, frame),
    };
    double worst = 0.0;
    for (const auto& state : states) {
      double sx = 1.5 * frame.w0 * std::sqrt(state.order() + 1.0);
      double sp = sx / frame.z0();
      for (int trial = 0; trial < 3; ++trial) {
        phasespace::PhaseSpacePoint zeta{rng.uniform(-sx, sx), rng.uniform(-sx, sx),
                                         rng.uniform(-sp, sp), rng.uniform(-sp, sp)};
        double closed = phasespace::wigner_closed(state, zeta, frame);
        double oracle = phasespace::wigner_oracle(state, zeta, frame, quad);
        worst = std::max(worst, std::abs(closed - oracle) / std::max(std::abs(oracle), 1e-8 * natural));
      }
    }
    b.add("closed_form_vs_quadrature", worst, 1e-6);
  }

  {
    double worst = 0.0;
    for (int trial = 0; trial < 30; ++trial) {
      int n = 1 + static_cast<int>(rng.uniform(0.0, 3.0));
      n = std::min(n, 3);
      double theta = rng.uniform(0.0, kPi);
      double phi = rng.uniform(0.0, 2.0 * kPi);
      auto rotated = poincare::rotate({n, 0}, theta, phi, frame);
      auto pole = poincare::rotate({n, 0}, 0.0, 0.0, frame);
      double sx = 1.5 * frame.w0 * std::sqrt(n + 1.0);
      double sp = sx / frame.z0();
      phasespace::PhaseSpacePoint zeta{rng.uniform(-sx, sx), rng.uniform(-sx, sx),
                                       rng.uniform(-sp, sp), rng.uniform(-sp, sp)};
      auto t = phasespace::transfer_matrix(theta, phi, frame);
      double lhs = phasespace::wigner_closed(rotated, zeta, frame);
      double rhs = phasespace::wigner_closed(pole, phasespace::apply(t.inverse(), zeta), frame);
      worst = std::max(worst, std::abs(lhs - rhs) / natural);
    }
    b.add("rotation_transform_law", worst, 1e-10);
  }

  return b.report;
}

SuiteReport suite_overlap(std::uint64_t seed, double tol_scale, const modes::BeamFrame& frame) {
  SuiteBuilder b{{"overlap", {}, 0.0, true}, tol_scale};
  SeededRng rng(seed);

  {
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      int l = static_cast<int>(rng.uniform(0.0, 3.0));
      int p = static_cast<int>(rng.uniform(0.0, 2.0));
      auto a = poincare::rotate({l, p}, rng.uniform(0.0, kPi), rng.uniform(0.0, 2.0 * kPi), frame);
      worst = std::max(worst, std::abs(phasespace::overlap(a, a) - 1.0));
    }
    b.add("self_overlap_unity", worst, 1e-12);
  }

  {
    double worst = 0.0;
    for (int l = 1; l <= 3; ++l)
      for (int trial = 0; trial < 5; ++trial) {
        double theta = rng.uniform(0.0, kPi);
        double phi = rng.uniform(0.0, 2.0 * kPi);
        auto a = poincare::rotate({l, 0}, theta, phi, frame);
        auto c = poincare::rotate({l, 0}, kPi - theta, phi + kPi, frame);
        worst = std::max(worst, phasespace::overlap(a, c));
      }
    b.add("antipodal_orthogonality", worst, 1e-10);
  }

  {
    double worst = 0.0;
    for (int l = 1; l <= 3; ++l) {
      double tau = (l + 1.0) / (l + 2.0);
      double theta = 2.0 * std::acos(std::sqrt(tau));
      auto pole = poincare::rotate({l, 1}, 0.0, 0.0, frame);
      auto tilted = poincare::rotate({l, 1}, theta, 0.0, frame);
      worst = std::max(worst, phasespace::overlap(pole, tilted));
    }
    b.add("radial_node_zero", worst, 1e-10);
  }

  {
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
      double theta = rng.uniform(0.0, kPi);
      double phi = rng.uniform(0.0, 2.0 * kPi);
      auto a = poincare::rotate({0, 1}, theta, phi, frame);
      auto c = poincare::rotate({0, 1}, kPi - theta, phi + kPi, frame);
      worst = std::max(worst, std::abs(phasespace::overlap(a, c) - 1.0));
    }
    b.add("zero_charge_antipodes_unity", worst, 1e-10);
  }

  {
    auto a = poincare::rotate({1, 0}, 0.7, 0.3, frame);
    auto c = poincare::rotate({1, 0}, 2.1, 4.0, frame);
    double closed = phasespace::overlap(a, c);
    double rx = frame.w0 * (2.5 + 1.2 * std::sqrt(2.0));
    double rp = rx / frame.z0();
    double lbar = frame.lambda_bar();
    double integral = phasespace::phase_space_integral(
        [&](const phasespace::PhaseSpacePoint& zeta) {
          return phasespace::wigner_closed(a, zeta, frame) * phasespace::wigner_closed(c, zeta, frame);
        },
        rx, rp, 48);
    integral *= (2.0 * kPi * lbar) * (2.0 * kPi * lbar);
    b.add("closed_form_vs_integral", std::abs(closed - integral), 1e-4);
  }

  return b.report;
}

SuiteReport suite_angmom(std::uint64_t, double tol_scale, const modes::BeamFrame& frame) {
  SuiteBuilder b{{"angmom", {}, 0.0, true}, tol_scale};
  using angmom::Amplitude;
  using angmom::AmplitudeSet;
  const double k0 = frame.k0;

  {
    auto set = AmplitudeSet::classical({{+1, 3, 0, k0, 1.0}});
    b.add("single_charge_oam", std::abs(angmom::orbital_z(set) - 3.0), 1e-12);
  }
  {
    auto set = AmplitudeSet::classical({{+1, 1, 0, k0, {0.0, 1.0}}, {+1, -1, 0, k0, {1.0, 0.0}}});
    b.add("balanced_charges_cancel", std::abs(angmom::orbital_z(set)), 1e-12);
  }
  {
    auto set = AmplitudeSet::classical({{+1, 2, 0, k0, 0.5}, {+1, -1, 0, k0, std::sqrt(0.75)}});
    b.add("weighted_charge_mixture", std::abs(angmom::orbital_z(set) + 0.25), 1e-12);
  }
  {
    auto set = AmplitudeSet::classical(
        {{+1, 0, 0, k0, std::sqrt(0.9)}, {-1, 0, 0, k0, std::sqrt(0.1)}});
    b.add("spin_mixture", std::abs(angmom::spin_z(set) - 0.8), 1e-12);
  }
  {
    double amp = std::sqrt(1.0 / k0);
    auto set = AmplitudeSet::classical({{+1, 0, 0, k0, amp}, {+1, 0, 0, 2.0 * k0, amp}});
    b.add("two_frequency_energy", std::abs(angmom::paraxial_energy(set) / k0 - 1.5), 1e-12);
  }
  {
    auto set = AmplitudeSet::classical({{+1, 2, 0, k0, 0.7}});
    b.add("oam_per_unit_energy", std::abs(angmom::oam_per_energy(set) * k0 - 2.0), 1e-12);
  }
  {
    auto set = AmplitudeSet::one_photon({{+1, 1, 0, k0, std::sqrt(0.5)}, {-1, 2, 1, k0, std::sqrt(0.5)}});
    b.add("one_photon_normalization", std::abs(set.weight() - 1.0), 1e-10);
  }

  return b.report;
}

}  // namespace

std::vector<std::string> suite_names() { return {"modes", "symplectic", "wigner", "overlap", "angmom"}; }

SuiteReport run_suite(const std::string& name, std::uint64_t seed, double tol_scale,
                      const modes::BeamFrame& frame) {
  if (!(tol_scale > 0.0)) throw std::invalid_argument("tolerance scale must be positive");
  if (name == "modes") return suite_modes(seed, tol_scale, frame);
  if (name == "symplectic") return suite_symplectic(seed, tol_scale, frame);
  if (name == "wigner") return suite_wigner(seed, tol_scale, frame);
  if (name == "overlap") return suite_overlap(seed, tol_scale, frame);
  if (name == "angmom") return suite_angmom(seed, tol_scale, frame);
  if (name == "all") {
    SuiteReport all{"all", {}, 0.0, true};
    for (const auto& each : suite_names()) {
      SuiteReport r = run_suite(each, seed, tol_scale, frame);
      for (auto& check : r.checks) {
        check.name = each + "." + check.name;
        all.checks.push_back(check);
      }
      all.max_residual = std::max(all.max_residual, r.max_residual);
      all.pass = all.pass && r.pass;
    }
    return all;
  }
  throw std::invalid_argument("unknown verification suite: " + name);
}

std::string report_json(const SuiteReport& report) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks)
    checks.push_back(nlohmann::ordered_json{
        {"name", c.name}, {"residual", c.residual}, {"tol", c.tol}, {"pass", c.pass}});
  nlohmann::ordered_json j{
      {"suite", report.suite},
      {"checks", checks},
      {"max_residual", report.max_residual},
      {"pass", report.pass},
  };
  return j.dump(2) + "\n";
}

}  // namespace oam::verify
