#pragma once

#include <Eigen/Dense>
#include <array>
#include <functional>

#include "oamphase/modes.hpp"
#include "oamphase/poincare.hpp"
#include "oamphase/special.hpp"

namespace oam::phasespace {

// Transverse phase-space point: positions (length units) and normalized
// momenta (dimensionless transverse wave-vector components).
struct PhaseSpacePoint {
  double x = 0.0;
  double y = 0.0;
  double px = 0.0;
  double py = 0.0;
};

// Ray-transfer matrix of the sphere rotation (theta, phi), acting on column
// vectors (x, y, px, py). Symplectic with det = 1.
struct SymplecticT {
  Eigen::Matrix4d matrix;
  double theta = 0.0;
  double phi = 0.0;
  double z0 = 0.0;

  Eigen::Matrix4d inverse() const;  // via the symplectic identity -M T^t M
};

// The classical quadratic forms entering the closed-form Wigner function:
// Q0 = 2 [x^2 + y^2 + (px^2 + py^2) z0^2] / w0^2 and the vector Q obtained
// from the generator quadratics with operators replaced by phase-space
// coordinates. |Q| = Q0/4, so Q0 ± 4 Q.u is never negative.
struct QuadraticForms {
  double Q0 = 0.0;
  std::array<double, 3> Q{};
};

QuadraticForms quadratic_forms(const PhaseSpacePoint& zeta, const modes::BeamFrame& frame);

// Symplectic metric: [[0, I2], [-I2, 0]].
Eigen::Matrix4d symplectic_metric();

SymplecticT transfer_matrix(double theta, double phi, const modes::BeamFrame& frame);

PhaseSpacePoint apply(const Eigen::Matrix4d& m, const PhaseSpacePoint& zeta);

// Closed-form Wigner function of the sphere state at zeta (waist plane;
// propagate points with galilean_boost):
//   W = ((-1)^N / (pi^2 lbar^2)) e^{-Q0} L_{(N-l)/2}(Q0 - 4 Q.u_r) L_{(N+l)/2}(Q0 + 4 Q.u_r).
double wigner_closed(const poincare::SphereState& state, const PhaseSpacePoint& zeta,
                     const modes::BeamFrame& frame);

// Brute-force Wigner transform: 2D quadrature of the momentum wavefunction
// autocorrelation over the chord variable. `residual_out`, when non-null,
// receives the magnitude of the imaginary part the quadrature should have
// cancelled, a direct estimate of its accuracy.
double wigner_oracle(const poincare::SphereState& state, const PhaseSpacePoint& zeta,
                     const modes::BeamFrame& frame, const special::Quadrature2D& quad,
                     double* residual_out = nullptr);

// Default chord-variable rule: half-width 12/(w0 k0), 128 nodes per axis.
special::Quadrature2D default_wigner_quadrature(const modes::BeamFrame& frame);

// Free-space propagation of Wigner arguments: (x - z px, y - z py, px, py).
PhaseSpacePoint galilean_boost(const PhaseSpacePoint& zeta, double z);

// |<a|b>|^2 between two sphere states from the closed-form overlap law,
// evaluated in a form regular at orthogonal parameters. States with different
// pole labels (or different orders) report 0; the law is exact for pairs on
// one sphere and for disjoint orders, which is its supported domain.
double overlap(const poincare::SphereState& a, const poincare::SphereState& b);

// The overlap parameter tau = cos^2((dtheta)/2) cos^2((dphi)/2)
//                            + cos^2((theta+theta')/2) sin^2((dphi)/2).
double overlap_tau(double theta_a, double phi_a, double theta_b, double phi_b);

// <L> three ways: from the generator matrices (exact linear algebra) and from
// the phase-space integral of the quadratic forms against the Wigner
// function. expectation_L cross-checks the two routes and throws
// ConsistencyError if they diverge beyond 1e-6; the individual routes are
// exposed for independent testing. All return (l/2) u_r.
// nodes_per_axis <= 0 selects a rule scaled to the mode order.
std::array<double, 3> expectation_L_generators(const poincare::SphereState& state,
                                               const modes::BeamFrame& frame);
std::array<double, 3> expectation_L_integral(const poincare::SphereState& state,
                                             const modes::BeamFrame& frame, int nodes_per_axis = 0);
std::array<double, 3> expectation_L(const poincare::SphereState& state, const modes::BeamFrame& frame);

// Nested 4D Gauss-Legendre quadrature of f(zeta) over the phase-space box
// |x|,|y| <= rx and |px|,|py| <= rp. Exposed for Wigner-moment tests.
double phase_space_integral(const std::function<double(const PhaseSpacePoint&)>& f, double rx, double rp,
                            int nodes_per_axis);

}  // namespace oam::phasespace
