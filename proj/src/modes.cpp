#include "oamphase/modes.hpp"

#include <stdexcept>
#include <string>

#include "oamphase/special.hpp"

namespace oam::modes {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

// exp(log_mag) * lag * exp(i phase) with the Laguerre factor folded into log
// space, so huge radial arguments neither overflow nor underflow prematurely.
std::complex<double> from_log_parts(double log_mag, double lag, double phase) {
  if (lag == 0.0) return {0.0, 0.0};
  double mag = std::exp(log_mag + std::log(std::abs(lag)));
  if (lag < 0.0) mag = -mag;
  return std::polar(mag, phase);
}

}  // namespace

BeamFrame::BeamFrame(double w0_, double k0_) : w0(w0_), k0(k0_) {
  if (!(w0 > 0.0)) throw std::invalid_argument("BeamFrame: waist w0 must be positive");
  if (!(k0 > 0.0)) throw std::invalid_argument("BeamFrame: wavenumber k0 must be positive");
}

ModeIndex::ModeIndex(int l_, int p_) : l(l_), p(p_) {
  if (p < 0) throw std::invalid_argument("ModeIndex: radial index p must be non-negative");
}

std::complex<double> lg_position(ModeIndex mode, const BeamFrame& frame, double r, double phi, double z) {
  const int al = std::abs(mode.l);
  const double z0 = frame.z0();
  const double wz = frame.w0 * std::sqrt(1.0 + (z / z0) * (z / z0));
  const double rho2 = r * r / (wz * wz);

  const double gouy = -(2.0 * mode.p + al + 1.0) * std::atan2(z, z0);
  const double curvature = frame.k0 * r * r * z / (2.0 * (z * z + z0 * z0));
  const double phase = mode.l * phi + curvature + gouy;

  if (r == 0.0) {
    if (al != 0) return {0.0, 0.0};
    double mag = std::exp(special::log_norm_lg(0, mode.p)) / wz * special::laguerre(mode.p, 0, 0.0);
    return std::polar(mag, phase);
  }

  const double lag = special::laguerre(mode.p, al, 2.0 * rho2);
  const double log_mag =
      special::log_norm_lg(mode.l, mode.p) - std::log(wz) - rho2 + al * std::log(M_SQRT2 * r / wz);
  return from_log_parts(log_mag, lag, phase);
}

std::complex<double> lg_momentum(ModeIndex mode, const BeamFrame& frame, double rho, double varphi) {
  const int al = std::abs(mode.l);
  const double w0 = frame.w0;
  const double arg = w0 * w0 * rho * rho / 2.0;
  const double phase = mode.l * varphi - M_PI_2 * (2.0 * mode.p + al);

  const double log_norm =
      std::log(w0) + 0.5 * (std::lgamma(mode.p + 1.0) - std::log(2.0 * M_PI) - std::lgamma(al + mode.p + 1.0));

  if (rho == 0.0) {
    if (al != 0) return {0.0, 0.0};
    return std::polar(std::exp(log_norm) * special::laguerre(mode.p, 0, 0.0), phase);
  }

  const double lag = special::laguerre(mode.p, al, arg);
  const double log_mag = log_norm - arg / 2.0 + al * std::log(w0 * rho / M_SQRT2);
  return from_log_parts(log_mag, lag, phase);
}

std::complex<double> hg_position(int nx, int ny, const BeamFrame& frame, double x, double y, double z) {
  if (nx < 0 || ny < 0) throw std::domain_error("hg_position: mode indices must be non-negative");
  const double z0 = frame.z0();
  const double wz = frame.w0 * std::sqrt(1.0 + (z / z0) * (z / z0));
  const double r2 = x * x + y * y;

  auto hermite = [](int n, double u) {
    double hm2 = 1.0;
    if (n == 0) return hm2;
    double hm1 = 2.0 * u;
    for (int k = 1; k < n; ++k) {
      double hk = 2.0 * u * hm1 - 2.0 * k * hm2;
      hm2 = hm1;
      hm1 = hk;
    }
    return hm1;
  };

  const double log_norm = 0.5 * std::log(2.0 / M_PI) - std::log(wz) -
                          0.5 * ((nx + ny) * std::log(2.0) + std::lgamma(nx + 1.0) + std::lgamma(ny + 1.0));
  const double hx = hermite(nx, M_SQRT2 * x / wz);
  const double hy = hermite(ny, M_SQRT2 * y / wz);
  const double gouy = -(nx + ny + 1.0) * std::atan2(z, z0);
  const double curvature = frame.k0 * r2 * z / (2.0 * (z * z + z0 * z0));

  const double h = hx * hy;
  if (h == 0.0) return {0.0, 0.0};
  double mag = std::exp(log_norm - r2 / (wz * wz) + std::log(std::abs(h)));
  if (h < 0.0) mag = -mag;
  return std::polar(mag, curvature + gouy);
}

ClosureSum closure_expand(double qx, double qy, const BeamFrame& frame, double rx, double ry, double z,
                          int max_order) {
  if (max_order < 0) throw std::invalid_argument("closure_expand: max_order must be non-negative");

  const double q = std::hypot(qx, qy);
  const double varphi = (q == 0.0) ? 0.0 : std::atan2(qy, qx);
  const double r = std::hypot(rx, ry);
  const double phi = (r == 0.0) ? 0.0 : std::atan2(ry, rx);

  std::complex<double> sum{0.0, 0.0};
  for (int order = 0; order <= max_order; ++order) {
    for (int l = -order; l <= order; l += 2) {
      if ((order - std::abs(l)) % 2 != 0) continue;
      ModeIndex mode{l, (order - std::abs(l)) / 2};
      sum += std::conj(lg_momentum(mode, frame, q, varphi)) * lg_position(mode, frame, r, phi, z);
    }
  }

  // Paraxial propagator phase of the plane-wave component: -q^2 z / (2 k0).
  const double prop = -q * q * z / (2.0 * frame.k0);
  ClosureSum result;
  result.partial_sum = sum;
  result.target = std::exp(kI * (qx * rx + qy * ry + prop)) / (2.0 * M_PI);
  result.residual = std::abs(sum - result.target);
  result.order_used = max_order;
  return result;
}

}  // namespace oam::modes
