#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "oamphase/modes.hpp"

namespace oam::poincare {

// The order-N mode subspace, spanned by the N+1 Laguerre-Gauss modes with
// 2p+|l| = N, ordered by descending l: basis[j] = (l = N-2j, p = min(j, N-j)).
struct OrderNSubspace {
  int N = 0;
  std::vector<modes::ModeIndex> basis;

  explicit OrderNSubspace(int order);

  int dimension() const { return N + 1; }
  // Position of charge l within the basis; throws std::invalid_argument if l
  // does not belong to the shell.
  int index_of(int l) const;
};

// SU(2) generator matrices on the order-N subspace. Hermitian, commuting as
// [Lx, Ly] = i Lz (cyclic), with Lz diagonal l'/2 and Casimir (N/2)(N/2+1).
struct GeneratorMatrices {
  int N = 0;
  Eigen::MatrixXcd Lx;
  Eigen::MatrixXcd Ly;
  Eigen::MatrixXcd Lz;
};

// A point (theta, phi) on the orbital sphere of pole mode (l, p), realized as
// a unit coefficient vector over the order-N basis.
struct SphereState {
  modes::ModeIndex mode;  // pole label
  double theta = 0.0;
  double phi = 0.0;
  Eigen::VectorXcd coeffs;

  int order() const { return mode.order(); }
};

// Generators built from the two-mode ladder (Schwinger) representation of the
// quadratic transverse operators, expressed in the Laguerre-Gauss basis.
// The frame fixes the length scales the quadratics are measured in; the
// resulting dimensionless matrices are frame-independent.
GeneratorMatrices build_generators(int N, const modes::BeamFrame& frame);

// Unitary exp(-i theta L.u_phi) with u_phi = (-sin phi, cos phi, 0), computed
// by eigendecomposition of the Hermitian generator. No global rephasing.
Eigen::MatrixXcd rotation_matrix(int N, double theta, double phi, const modes::BeamFrame& frame);

// Rotates the pole mode |l,p> to the sphere point (theta, phi). Pole labels
// use l >= 0; negative-l poles map to the |l| sphere through the inversion
// (theta, phi) -> (pi - theta, phi + pi). theta = 0 returns the exact pole
// basis vector. Deterministic global phase: the highest-l coefficient is made
// real-nonnegative when nonzero. Throws std::domain_error for theta outside
// [0, pi].
SphereState rotate(modes::ModeIndex mode, double theta, double phi, const modes::BeamFrame& frame);

// Coefficient vector of rotate(...), in basis order.
Eigen::VectorXcd sphere_coefficients(modes::ModeIndex mode, double theta, double phi,
                                     const modes::BeamFrame& frame);

// Superposition field sum_j coeffs[j] LG_{basis[j]}(r, phi, z) sampled on the
// grid (grid.z selects the plane).
modes::ComplexField2D synthesize_field(const SphereState& state, const modes::BeamFrame& frame,
                                       const modes::GridSpec& grid);

// True when the grid half-width covers the order-N mode support
// (extent >= 4 w0 sqrt(N+1)); callers should warn when it does not.
bool grid_extent_adequate(const modes::GridSpec& grid, const modes::BeamFrame& frame, int N);

}  // namespace oam::poincare
