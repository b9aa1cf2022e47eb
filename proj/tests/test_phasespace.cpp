#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "doctest.h"
#include "oamphase/modes.hpp"
#include "oamphase/phasespace.hpp"
#include "oamphase/poincare.hpp"
#include "oamphase/rng.hpp"
#include "oamphase/special.hpp"

using oam::SeededRng;
using oam::modes::BeamFrame;
using oam::phasespace::PhaseSpacePoint;
using oam::phasespace::QuadraticForms;
using oam::phasespace::SymplecticT;
using oam::phasespace::apply;
using oam::phasespace::expectation_L;
using oam::phasespace::expectation_L_generators;
using oam::phasespace::expectation_L_integral;
using oam::phasespace::galilean_boost;
using oam::phasespace::overlap;
using oam::phasespace::overlap_tau;
using oam::phasespace::phase_space_integral;
using oam::phasespace::quadratic_forms;
using oam::phasespace::symplectic_metric;
using oam::phasespace::transfer_matrix;
using oam::phasespace::wigner_closed;
using oam::phasespace::wigner_oracle;
using oam::poincare::SphereState;
using oam::poincare::rotate;

namespace {

const BeamFrame kFrame(1.0, 2.0);

double natural_scale(const BeamFrame& frame) {
  const double lb = frame.lambda_bar();
  return 1.0 / (M_PI * M_PI * lb * lb);
}

PhaseSpacePoint random_point(SeededRng& rng, const BeamFrame& frame, double spread) {
  const double rx = spread * frame.w0;
  const double rp = spread * frame.w0 / frame.z0();
  return {rng.uniform(-rx, rx), rng.uniform(-rx, rx), rng.uniform(-rp, rp), rng.uniform(-rp, rp)};
}

}  // namespace

TEST_CASE("quadratic forms at a hand-computed point") {
  // w0 = 1, k0 = 2: lambda_bar = 0.5, z0 = 1.
  const PhaseSpacePoint zeta{1.0, 0.5, 0.3, -0.2};
  const QuadraticForms q = quadratic_forms(zeta, kFrame);
  CHECK(std::abs(q.Q0 - 2.76) < 1e-12);
  CHECK(std::abs(q.Q[0] - 0.4) < 1e-12);
  CHECK(std::abs(q.Q[1] - 0.44) < 1e-12);
  CHECK(std::abs(q.Q[2] + 0.35) < 1e-12);
}

TEST_CASE("the form vector always has length Q0/4") {
  SeededRng rng(3);
  const BeamFrame frames[] = {kFrame, BeamFrame(0.7, 3.1)};
  for (const auto& frame : frames)
    for (int trial = 0; trial < 100; ++trial) {
      const PhaseSpacePoint zeta = random_point(rng, frame, 3.0);
      const QuadraticForms q = quadratic_forms(zeta, frame);
      const double norm = std::sqrt(q.Q[0] * q.Q[0] + q.Q[1] * q.Q[1] + q.Q[2] * q.Q[2]);
      CHECK(std::abs(norm - q.Q0 / 4.0) < 1e-12 * std::max(1.0, q.Q0));
    }
}

TEST_CASE("transfer matrix is the identity at zero tilt") {
  const SymplecticT t = transfer_matrix(0.0, 2.2, kFrame);
  CHECK((t.matrix - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("transfer matrix at a half turn swaps position and momentum planes") {
  const SymplecticT t = transfer_matrix(M_PI, 0.0, kFrame);  // z0 = 1
  Eigen::Matrix4d expected;
  expected << 0, 0, 0, 1,
              0, 0, 1, 0,
              0, -1, 0, 0,
              -1, 0, 0, 0;
  CHECK((t.matrix - expected).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("transfer matrices are symplectic with unit determinant") {
  SeededRng rng(17);
  const Eigen::Matrix4d metric = symplectic_metric();
  for (int trial = 0; trial < 200; ++trial) {
    const BeamFrame frame(rng.uniform(0.5, 2.0), rng.uniform(1.0, 4.0));
    const SymplecticT t = transfer_matrix(rng.uniform(0.0, M_PI), rng.uniform(0.0, 2.0 * M_PI), frame);
    CHECK(std::abs(t.matrix.determinant() - 1.0) < 1e-12);
    CHECK((t.matrix * metric * t.matrix.transpose() - metric).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((t.inverse() * t.matrix - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((t.inverse() - t.matrix.inverse()).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("apply performs the matrix action on a point") {
  const SymplecticT t = transfer_matrix(1.3, 0.8, kFrame);
  const PhaseSpacePoint zeta{0.4, -0.2, 0.9, 0.1};
  const PhaseSpacePoint mapped = apply(t.matrix, zeta);
  const Eigen::Vector4d v = t.matrix * Eigen::Vector4d(zeta.x, zeta.y, zeta.px, zeta.py);
  CHECK(mapped.x == doctest::Approx(v(0)).epsilon(1e-15));
  CHECK(mapped.y == doctest::Approx(v(1)).epsilon(1e-15));
  CHECK(mapped.px == doctest::Approx(v(2)).epsilon(1e-15));
  CHECK(mapped.py == doctest::Approx(v(3)).epsilon(1e-15));
}

TEST_CASE("free-space drift is a symplectic shear") {
  const double z = 1.7;
  Eigen::Matrix4d b;
  for (int j = 0; j < 4; ++j) {
    PhaseSpacePoint e{j == 0 ? 1.0 : 0.0, j == 1 ? 1.0 : 0.0, j == 2 ? 1.0 : 0.0,
                      j == 3 ? 1.0 : 0.0};
    const PhaseSpacePoint out = galilean_boost(e, z);
    b.col(j) << out.x, out.y, out.px, out.py;
  }
  const Eigen::Matrix4d metric = symplectic_metric();
  CHECK(std::abs(b.determinant() - 1.0) < 1e-14);
  CHECK((b * metric * b.transpose() - metric).cwiseAbs().maxCoeff() < 1e-14);

  const PhaseSpacePoint zeta{0.5, -0.3, 0.2, 0.4};
  const PhaseSpacePoint out = galilean_boost(zeta, z);
  CHECK(out.x == doctest::Approx(0.5 - z * 0.2).epsilon(1e-15));
  CHECK(out.y == doctest::Approx(-0.3 - z * 0.4).epsilon(1e-15));
  CHECK(out.px == 0.2);
  CHECK(out.py == 0.4);
}

TEST_CASE("ground-mode Wigner function is the phase-space Gaussian") {
  const SphereState state = rotate({0, 0}, 0.0, 0.0, kFrame);
  const double peak = natural_scale(kFrame);
  CHECK(wigner_closed(state, {0, 0, 0, 0}, kFrame) == doctest::Approx(peak).epsilon(1e-12));

  const PhaseSpacePoint zeta{kFrame.w0, 0.0, 0.0, 0.0};  // Q0 = 2
  CHECK(wigner_closed(state, zeta, kFrame) == doctest::Approx(peak * std::exp(-2.0)).epsilon(1e-12));
}

TEST_CASE("origin value alternates with the mode order and ignores the tilt") {
  SeededRng rng(23);
  const oam::modes::ModeIndex poles[] = {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {3, 0}, {1, 1}, {4, 0}, {0, 2}};
  for (const auto& mode : poles)
    for (int trial = 0; trial < 3; ++trial) {
      const SphereState state =
          rotate(mode, rng.uniform(0.0, M_PI), rng.uniform(0.0, 2.0 * M_PI), kFrame);
      const double expected = ((mode.order() % 2 == 0) ? 1.0 : -1.0) * natural_scale(kFrame);
      CHECK(wigner_closed(state, {0, 0, 0, 0}, kFrame) ==
            doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("a half-turn of the sphere equals the charge-flipped pole") {
  SeededRng rng(29);
  const SphereState turned = rotate({2, 0}, M_PI, 0.3, kFrame);
  const SphereState flipped = rotate({-2, 0}, 0.0, 0.0, kFrame);
  for (int trial = 0; trial < 20; ++trial) {
    const PhaseSpacePoint zeta = random_point(rng, kFrame, 2.0);
    CHECK(std::abs(wigner_closed(turned, zeta, kFrame) - wigner_closed(flipped, zeta, kFrame)) <
          1e-12 * natural_scale(kFrame));
  }
}

TEST_CASE("closed form agrees with the chord-integral transform") {
  SeededRng rng(31);
  const auto quad = oam::special::build_quadrature(18.0 / (kFrame.w0 * kFrame.k0), 192);
  const SphereState states[] = {rotate({1, 0}, 0.0, 0.0, kFrame),
                                rotate({2, 0}, M_PI / 3.0, 1.1, kFrame),
                                rotate({0, 1}, M_PI / 2.0, 0.0, kFrame)};
  const double floor = 1e-8 * natural_scale(kFrame);
  for (const auto& state : states)
    for (int trial = 0; trial < 3; ++trial) {
      const PhaseSpacePoint zeta = random_point(rng, kFrame, 1.5 * std::sqrt(state.order() + 1.0));
      double residual = -1.0;
      const double reference = wigner_oracle(state, zeta, kFrame, quad, &residual);
      const double closed = wigner_closed(state, zeta, kFrame);
      CHECK(residual >= 0.0);
      CHECK(residual < 1e-6 * natural_scale(kFrame));
      CHECK(std::abs(closed - reference) / std::max(std::abs(reference), floor) < 1e-6);
    }
}

TEST_CASE("sphere rotation acts on Wigner arguments through the transfer matrix") {
  SeededRng rng(37);
  const oam::modes::ModeIndex poles[] = {{1, 0}, {2, 0}, {0, 1}, {3, 0}, {1, 1}, {4, 0}};
  for (const auto& mode : poles)
    for (int trial = 0; trial < 5; ++trial) {
      const double theta = rng.uniform(0.0, M_PI);
      const double phi = rng.uniform(0.0, 2.0 * M_PI);
      const SphereState tilted = rotate(mode, theta, phi, kFrame);
      const SphereState pole = rotate(mode, 0.0, 0.0, kFrame);
      const SymplecticT t = transfer_matrix(theta, phi, kFrame);
      const PhaseSpacePoint zeta = random_point(rng, kFrame, 1.5 * std::sqrt(mode.order() + 1.0));
      const PhaseSpacePoint back = apply(t.inverse(), zeta);
      CHECK(std::abs(wigner_closed(tilted, zeta, kFrame) - wigner_closed(pole, back, kFrame)) <
            1e-10 * natural_scale(kFrame));
    }
}

TEST_CASE("Wigner function integrates to one with unit purity") {
  const SphereState state = rotate({1, 0}, M_PI / 3.0, 0.4, kFrame);
  const double spread = kFrame.w0 * (2.5 + 1.2 * std::sqrt(state.order() + 1.0));
  const double rp = spread / kFrame.z0();
  const double lb = kFrame.lambda_bar();

  const double total = phase_space_integral(
      [&](const PhaseSpacePoint& zeta) { return wigner_closed(state, zeta, kFrame); }, spread, rp, 48);
  CHECK(std::abs(total - 1.0) < 1e-4);

  const double purity =
      phase_space_integral(
          [&](const PhaseSpacePoint& zeta) {
            const double w = wigner_closed(state, zeta, kFrame);
            return w * w;
          },
          spread, rp, 48) *
      (2.0 * M_PI * lb) * (2.0 * M_PI * lb);
  CHECK(std::abs(purity - 1.0) < 1e-4);
}

TEST_CASE("drifting the arguments reproduces beam expansion") {
  const SphereState state = rotate({0, 0}, 0.0, 0.0, kFrame);
  const double z = kFrame.z0();
  const double rx = 6.0 * kFrame.w0;
  const double rp = 6.0 * kFrame.w0 / kFrame.z0();

  const double second_moment = phase_space_integral(
      [&](const PhaseSpacePoint& zeta) {
        return zeta.x * zeta.x * wigner_closed(state, galilean_boost(zeta, z), kFrame);
      },
      rx, rp, 40);
  // <x^2> doubles between the waist and one diffraction length.
  CHECK(std::abs(second_moment - kFrame.w0 * kFrame.w0 / 2.0) < 1e-4);
}

TEST_CASE("overlap closed form: diagnostics and special values") {
  const SphereState a = rotate({2, 0}, 0.9, 1.2, kFrame);
  CHECK(overlap(a, a) == doctest::Approx(1.0).epsilon(1e-12));

  // For spheres of pure charge (p = 0) the overlap is tau^l exactly.
  const SphereState b = rotate({2, 0}, 2.0, 4.4, kFrame);
  const double tau = overlap_tau(0.9, 1.2, 2.0, 4.4);
  CHECK(overlap(a, b) == doctest::Approx(tau * tau).epsilon(1e-12));
  CHECK(overlap(b, a) == doctest::Approx(overlap(a, b)).epsilon(1e-14));

  // Antipodal points are orthogonal whenever the sphere carries charge.
  for (int l = 1; l <= 3; ++l) {
    const SphereState north = rotate({l, 0}, 0.7, 0.3, kFrame);
    const SphereState south = rotate({l, 0}, M_PI - 0.7, 0.3 + M_PI, kFrame);
    CHECK(overlap(north, south) < 1e-10);
  }

  // On a chargeless sphere the antipode is the same ray.
  const SphereState n0 = rotate({0, 1}, 0.6, 1.0, kFrame);
  const SphereState s0 = rotate({0, 1}, M_PI - 0.6, 1.0 + M_PI, kFrame);
  CHECK(overlap(n0, s0) == doctest::Approx(1.0).epsilon(1e-10));

  // One radial node: the overlap vanishes at tau = (l+1)/(l+2).
  for (int l = 1; l <= 2; ++l) {
    const double tau_zero = (l + 1.0) / (l + 2.0);
    const double theta_zero = 2.0 * std::acos(std::sqrt(tau_zero));
    const SphereState pole = rotate({l, 1}, 0.0, 0.0, kFrame);
    const SphereState node = rotate({l, 1}, theta_zero, 0.0, kFrame);
    CHECK(overlap(pole, node) < 1e-10);
  }

  // Different sphere labels are reported as disjoint.
  CHECK(overlap(rotate({1, 0}, 0.4, 0.0, kFrame), rotate({2, 0}, 0.4, 0.0, kFrame)) == 0.0);
  CHECK(overlap(rotate({1, 0}, 0.4, 0.0, kFrame), rotate({1, 1}, 0.4, 0.0, kFrame)) == 0.0);
}

TEST_CASE("tau parameter: limits and symmetry") {
  CHECK(overlap_tau(0.3, 1.0, 0.3, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(overlap_tau(0.0, 0.0, M_PI, 2.2) < 1e-30);
  CHECK(overlap_tau(M_PI / 2.0, 0.0, M_PI / 2.0, M_PI) < 1e-30);
  CHECK(overlap_tau(0.4, 0.9, 1.3, 2.0) ==
        doctest::Approx(overlap_tau(1.3, 2.0, 0.4, 0.9)).epsilon(1e-14));
}

TEST_CASE("overlap law matches the Wigner cross-integral") {
  const SphereState a = rotate({1, 0}, 0.7, 0.3, kFrame);
  const SphereState b = rotate({1, 0}, 2.1, 4.0, kFrame);
  const double spread = kFrame.w0 * (2.5 + 1.2 * M_SQRT2);
  const double rp = spread / kFrame.z0();
  const double lb = kFrame.lambda_bar();
  const double integral = phase_space_integral(
                              [&](const PhaseSpacePoint& zeta) {
                                return wigner_closed(a, zeta, kFrame) * wigner_closed(b, zeta, kFrame);
                              },
                              spread, rp, 48) *
                          (2.0 * M_PI * lb) * (2.0 * M_PI * lb);
  CHECK(std::abs(overlap(a, b) - integral) < 1e-4);
}

TEST_CASE("mean angular momentum points along the sphere radius by both routes") {
  SeededRng rng(41);
  for (int trial = 0; trial < 6; ++trial) {
    const int l = 1 + static_cast<int>(rng.uniform(0.0, 2.999));
    const double theta = rng.uniform(0.2, M_PI - 0.2);
    const double phi = rng.uniform(0.0, 2.0 * M_PI);
    const SphereState state = rotate({l, 0}, theta, phi, kFrame);

    const std::array<double, 3> expected = {0.5 * l * std::sin(theta) * std::cos(phi),
                                            0.5 * l * std::sin(theta) * std::sin(phi),
                                            0.5 * l * std::cos(theta)};
    const auto exact = expectation_L_generators(state, kFrame);
    const auto numeric = expectation_L_integral(state, kFrame);
    const auto checked = expectation_L(state, kFrame);
    for (int j = 0; j < 3; ++j) {
      CHECK(std::abs(exact[j] - expected[j]) < 1e-10);
      CHECK(std::abs(numeric[j] - expected[j]) < 1e-4);
      CHECK(std::abs(checked[j] - exact[j]) < 1e-6);
    }
  }
}

TEST_CASE("default chord rule matches the documented shape") {
  const auto quad = oam::phasespace::default_wigner_quadrature(kFrame);
  CHECK(quad.radius == doctest::Approx(12.0 / (kFrame.w0 * kFrame.k0)).epsilon(1e-15));
  CHECK(quad.nodes_per_axis == 128);
}
