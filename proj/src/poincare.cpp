#include "oamphase/poincare.hpp"

#include <cmath>
#include <stdexcept>

namespace oam::poincare {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

// The order-N shell is a spin-N/2 multiplet under the two transverse mode
// ladders. In the LG basis ordered by descending l, slot j carries
// (n_+, n_-) = (N-j, j) and radial index p_j = min(j, N-j); the LG modes
// differ from the bare two-mode number states by a (-1)^p sign, which shows
// up below as the s_i s_j factors on the ladder matrix elements.
double basis_sign(int N, int j) { return (std::min(j, N - j) % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

OrderNSubspace::OrderNSubspace(int order) : N(order) {
  if (order < 0) throw std::invalid_argument("OrderNSubspace: order must be non-negative");
  basis.reserve(order + 1);
  for (int j = 0; j <= order; ++j) basis.emplace_back(order - 2 * j, std::min(j, order - j));
}

int OrderNSubspace::index_of(int l) const {
  if (std::abs(l) > N || (N - l) % 2 != 0)
    throw std::invalid_argument("OrderNSubspace: charge " + std::to_string(l) +
                                " is not on the order-" + std::to_string(N) + " shell");
  return (N - l) / 2;
}

GeneratorMatrices build_generators(int N, const modes::BeamFrame& frame) {
  (void)frame;  // fixes the units the quadratics live in; the matrices are dimensionless
  if (N < 0) throw std::invalid_argument("build_generators: order must be non-negative");

  const int dim = N + 1;
  Eigen::MatrixXcd raise = Eigen::MatrixXcd::Zero(dim, dim);
  for (int j = 1; j <= N; ++j) {
    const double elem = std::sqrt(double(N - j + 1) * double(j));
    raise(j - 1, j) = basis_sign(N, j - 1) * basis_sign(N, j) * elem;
  }

  GeneratorMatrices g;
  g.N = N;
  g.Lx = (raise + raise.adjoint()) / 2.0;
  g.Ly = (raise - raise.adjoint()) / (2.0 * kI);
  g.Lz = Eigen::MatrixXcd::Zero(dim, dim);
  for (int j = 0; j <= N; ++j) g.Lz(j, j) = (N - 2.0 * j) / 2.0;
  return g;
}

Eigen::MatrixXcd rotation_matrix(int N, double theta, double phi, const modes::BeamFrame& frame) {
  const GeneratorMatrices g = build_generators(N, frame);
  const Eigen::MatrixXcd generator = -std::sin(phi) * g.Lx + std::cos(phi) * g.Ly;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(generator);
  const Eigen::VectorXd ev = eig.eigenvalues();
  Eigen::VectorXcd phase(N + 1);
  for (int j = 0; j <= N; ++j) phase(j) = std::exp(-kI * (theta * ev(j)));
  return eig.eigenvectors() * phase.asDiagonal() * eig.eigenvectors().adjoint();
}

SphereState rotate(modes::ModeIndex mode, double theta, double phi, const modes::BeamFrame& frame) {
  if (!(theta >= 0.0 && theta <= M_PI))
    throw std::domain_error("rotate: polar angle must lie in [0, pi]");

  // Negative-charge poles live on the inverted |l| sphere.
  if (mode.l < 0) {
    const int N = mode.order();
    if (theta == 0.0) {
      SphereState state{mode, theta, phi, Eigen::VectorXcd::Zero(N + 1)};
      state.coeffs(OrderNSubspace(N).index_of(mode.l)) = 1.0;
      return state;
    }
    SphereState state = rotate(modes::ModeIndex{-mode.l, mode.p}, M_PI - theta, phi + M_PI, frame);
    state.mode = mode;
    state.theta = theta;
    state.phi = phi;
    return state;
  }

  const int N = mode.order();
  SphereState state{mode, theta, phi, Eigen::VectorXcd::Zero(N + 1)};
  const int pole = OrderNSubspace(N).index_of(mode.l);

  if (theta == 0.0) {
    state.coeffs(pole) = 1.0;
    return state;
  }

  state.coeffs = rotation_matrix(N, theta, phi, frame).col(pole);

  // Deterministic global phase: highest-l coefficient real and non-negative.
  const std::complex<double> leading = state.coeffs(0);
  if (std::abs(leading) > 1e-13) state.coeffs *= std::conj(leading) / std::abs(leading);
  return state;
}

Eigen::VectorXcd sphere_coefficients(modes::ModeIndex mode, double theta, double phi,
                                     const modes::BeamFrame& frame) {
  return rotate(mode, theta, phi, frame).coeffs;
}

modes::ComplexField2D synthesize_field(const SphereState& state, const modes::BeamFrame& frame,
                                       const modes::GridSpec& grid) {
  if (grid.nx <= 0 || grid.ny <= 0 || !(grid.extent > 0.0))
    throw std::invalid_argument("synthesize_field: grid needs positive extent and resolution");

  const OrderNSubspace shell(state.order());
  modes::ComplexField2D field{grid, {}};
  field.samples.assign(static_cast<std::size_t>(grid.nx) * grid.ny, {0.0, 0.0});

  for (int iy = 0; iy < grid.ny; ++iy) {
    const double y = grid.y_at(iy);
    for (int ix = 0; ix < grid.nx; ++ix) {
      const double x = grid.x_at(ix);
      const double r = std::hypot(x, y);
      const double phi = (r == 0.0) ? 0.0 : std::atan2(y, x);
      std::complex<double> value{0.0, 0.0};
      for (int j = 0; j <= shell.N; ++j) {
        const std::complex<double> c = state.coeffs(j);
        if (c == std::complex<double>{0.0, 0.0}) continue;
        value += c * modes::lg_position(shell.basis[j], frame, r, phi, grid.z);
      }
      field.at(ix, iy) = value;
    }
  }
  return field;
}

bool grid_extent_adequate(const modes::GridSpec& grid, const modes::BeamFrame& frame, int N) {
  return grid.extent >= 4.0 * frame.w0 * std::sqrt(N + 1.0);
}

}  // namespace oam::poincare
