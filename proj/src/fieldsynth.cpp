#include "oamphase/fieldsynth.hpp"

#include <cmath>
#include <stdexcept>

namespace oam::fieldsynth {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};
}

double WaveVector::q() const { return std::hypot(qx, qy); }
double WaveVector::norm() const { return std::sqrt(qx * qx + qy * qy + kz * kz); }

ParaxialRay::ParaxialRay(double k0_, double qx_, double qy_) : k0(k0_), qx(qx_), qy(qy_) {
  if (!(k0 > 0.0)) throw std::domain_error("ParaxialRay: carrier k0 must be positive");
}

double ParaxialRay::q() const { return std::hypot(qx, qy); }
double ParaxialRay::theta_param() const { return q() / (k0 * M_SQRT2); }

double dispersion_k0(const WaveVector& k) {
  const double q2 = k.qx * k.qx + k.qy * k.qy;
  if (q2 == 0.0 && k.kz <= 0.0)
    throw std::domain_error("dispersion_k0: carrier would not be positive (q = 0, kz <= 0)");
  return (k.kz + std::sqrt(k.kz * k.kz + 2.0 * q2)) / 2.0;
}

std::array<std::complex<double>, 3> PolarizationVector::cartesian() const {
  const double c = std::cos(varphi), s = std::sin(varphi);
  return {components[0] * c - components[1] * s, components[0] * s + components[1] * c, components[2]};
}

PolarizationVector polarization(int sigma, double q, double varphi, double k0) {
  if (sigma != 1 && sigma != -1) throw std::domain_error("polarization: sigma must be +1 or -1");
  if (!(k0 > 0.0)) throw std::domain_error("polarization: k0 must be positive");
  if (q < 0.0) throw std::domain_error("polarization: q must be non-negative");

  const double t = q / (k0 * M_SQRT2);
  const double t2 = t * t;
  const double root = std::sqrt(1.0 + t2 * t2);
  const std::complex<double> front = std::exp(-kI * (double(sigma) * varphi)) / M_SQRT2;

  PolarizationVector eps;
  eps.sigma = sigma;
  eps.varphi = varphi;
  eps.components[0] = front * ((1.0 - t2) / root);
  eps.components[1] = front * (-kI * double(sigma));
  eps.components[2] = front * (-std::sqrt(2.0 * t2 / (1.0 + t2 * t2)));
  return eps;
}

LgDecomposition amplitudes_to_lg(const std::function<std::complex<double>(double, double)>& alpha_q,
                                 int basis_orders, int sigma, double k0_bin,
                                 const modes::BeamFrame& frame, const special::Quadrature2D& quad) {
  if (basis_orders < 0) throw std::invalid_argument("amplitudes_to_lg: basis_orders must be non-negative");
  if (sigma != 1 && sigma != -1) throw std::invalid_argument("amplitudes_to_lg: sigma must be +1 or -1");
  if (!(k0_bin > 0.0)) throw std::invalid_argument("amplitudes_to_lg: k0 bin must be positive");

  // Sample once; every projection reuses the same nodes.
  std::vector<std::complex<double>> samples(quad.size());
  double energy = 0.0;
  for (std::size_t i = 0; i < quad.size(); ++i) {
    samples[i] = alpha_q(quad.x[i], quad.y[i]);
    energy += quad.w[i] * std::norm(samples[i]);
  }

  std::vector<double> fraction_by_order(basis_orders + 1, 0.0);
  std::vector<angmom::Amplitude> entries;
  double captured = 0.0;
  for (int order = 0; order <= basis_orders; ++order) {
    for (int l = -order; l <= order; l += 2) {
      modes::ModeIndex mode{l, (order - std::abs(l)) / 2};
      std::complex<double> alpha{0.0, 0.0};
      for (std::size_t i = 0; i < quad.size(); ++i) {
        const double rho = std::hypot(quad.x[i], quad.y[i]);
        const double ang = (rho == 0.0) ? 0.0 : std::atan2(quad.y[i], quad.x[i]);
        alpha += quad.w[i] * std::conj(modes::lg_momentum(mode, frame, rho, ang)) * samples[i];
      }
      captured += std::norm(alpha);
      entries.push_back({sigma, mode.l, mode.p, k0_bin, alpha});
    }
    fraction_by_order[order] = (energy > 0.0) ? captured / energy : 0.0;
  }

  const double captured_fraction = (energy > 0.0) ? captured / energy : 0.0;
  if (captured_fraction > 1.0 + 1e-6)
    throw std::runtime_error(
        "amplitudes_to_lg: quadrature resolution too low (captured energy exceeds the total; "
        "refine the rule or shrink basis_orders)");

  return {angmom::AmplitudeSet::classical(std::move(entries)), energy, captured_fraction,
          std::move(fraction_by_order)};
}

LgDecomposition amplitudes_to_lg(const std::function<std::complex<double>(double, double)>& alpha_q,
                                 int basis_orders, int sigma, double k0_bin,
                                 const modes::BeamFrame& frame) {
  // Momentum-space support of order-N modes scales like (2/w0) sqrt(N+1); the
  // additive margin keeps the Gaussian tails below the projection tolerance.
  const double radius = (2.0 / frame.w0) * (3.0 * std::sqrt(basis_orders + 1.0) + 3.0);
  return amplitudes_to_lg(alpha_q, basis_orders, sigma, k0_bin, frame,
                          special::build_quadrature(radius, 192));
}

}  // namespace oam::fieldsynth
