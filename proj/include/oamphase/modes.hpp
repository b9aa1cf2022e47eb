#pragma once

#include <cmath>
#include <complex>
#include <vector>

namespace oam::modes {

// Beam geometry: waist w0 and carrier wavenumber k0. The reduced wavelength
// 1/k0 plays the role of hbar in the transverse phase space, and
// z0 = k0 w0^2 / 2 is the Rayleigh range.
struct BeamFrame {
  double w0;
  double k0;

  BeamFrame(double w0_, double k0_);

  double z0() const { return k0 * w0 * w0 / 2.0; }
  double lambda_bar() const { return 1.0 / k0; }
  // Paraxial validity figure w0*k0; callers should warn below 10.
  double paraxiality() const { return w0 * k0; }
};

// Laguerre-Gauss mode label: topological charge l, radial index p.
struct ModeIndex {
  int l;
  int p;

  ModeIndex(int l_, int p_);

  int order() const { return 2 * p + std::abs(l); }
};

// Square sampling grid at plane z, pixel-centered. Row-major samples with
// image orientation: row iy = 0 is the top of the frame (largest y).
struct GridSpec {
  double extent = 0.0;  // half-width; grid covers [-extent, extent]^2
  int nx = 0;
  int ny = 0;
  double z = 0.0;

  double dx() const { return 2.0 * extent / nx; }
  double dy() const { return 2.0 * extent / ny; }
  double x_at(int ix) const { return -extent + (ix + 0.5) * dx(); }
  double y_at(int iy) const { return extent - (iy + 0.5) * dy(); }
};

struct ComplexField2D {
  GridSpec grid;
  std::vector<std::complex<double>> samples;  // size nx*ny, index iy*nx+ix

  std::complex<double>& at(int ix, int iy) { return samples[static_cast<std::size_t>(iy) * grid.nx + ix]; }
  const std::complex<double>& at(int ix, int iy) const {
    return samples[static_cast<std::size_t>(iy) * grid.nx + ix];
  }
};

// Laguerre-Gauss mode at (r, phi, z): azimuthal phase exp(+i l phi), wavefront
// curvature phase k0 r^2 z / (2 (z^2 + z0^2)) (finite at z = 0), and Gouy
// phase -(2p+|l|+1) arctan(z/z0). Unit L2 norm on every transverse plane.
std::complex<double> lg_position(ModeIndex mode, const BeamFrame& frame, double r, double phi, double z);

// Fourier-transform partner of lg_position at the waist plane, evaluated at
// transverse spatial frequency (rho, varphi); carries the constant phase
// exp(-i (pi/2) (2p+|l|)).
std::complex<double> lg_momentum(ModeIndex mode, const BeamFrame& frame, double rho, double varphi);

// Hermite-Gauss mode with the same frame; Gouy phase -(nx+ny+1) arctan(z/z0).
// Throws std::domain_error for negative nx or ny.
std::complex<double> hg_position(int nx, int ny, const BeamFrame& frame, double x, double y, double z);

// Partial plane-wave expansion over all modes of order N <= max_order.
// The infinite series resums (in the Abel/Cesaro sense) to
// exp(i (q.r - k0 theta^2 z)) / (2 pi) with theta^2 = q^2/(2 k0^2); raw
// partial sums oscillate around that limit with slowly decaying amplitude,
// which `residual` makes visible. `target` is the resummed limit.
struct ClosureSum {
  std::complex<double> partial_sum;
  std::complex<double> target;
  double residual = 0.0;  // |partial_sum - target|
  int order_used = 0;
};

ClosureSum closure_expand(double qx, double qy, const BeamFrame& frame, double rx, double ry, double z,
                          int max_order);

}  // namespace oam::modes
