#pragma once

#include <array>
#include <complex>
#include <functional>
#include <vector>

#include "oamphase/angmom.hpp"
#include "oamphase/modes.hpp"
#include "oamphase/special.hpp"

namespace oam::fieldsynth {

// Full wave vector split into transverse q and longitudinal kz.
struct WaveVector {
  double qx = 0.0;
  double qy = 0.0;
  double kz = 0.0;

  double q() const;
  double norm() const;
};

// A wave vector on the paraxial dispersion shell of carrier k0. The
// paraxiality parameter theta = q/(k0 sqrt(2)) is always derived, never
// stored, so kz = k0 (1 - theta^2) holds by construction.
struct ParaxialRay {
  double k0;
  double qx;
  double qy;

  ParaxialRay(double k0_, double qx_, double qy_);

  double q() const;
  double theta_param() const;
  double kz() const { double t = theta_param(); return k0 * (1.0 - t * t); }
  double norm() const { double t2 = theta_param() * theta_param(); return k0 * std::sqrt(1.0 + t2 * t2); }
};

// Helicity polarization vector, components in the local (u_rho, u_phi, u_z)
// frame attached to the transverse direction varphi.
struct PolarizationVector {
  int sigma = +1;
  std::array<std::complex<double>, 3> components{};  // (rho, phi, z)
  double varphi = 0.0;

  // Same vector on the fixed Cartesian (x, y, z) axes.
  std::array<std::complex<double>, 3> cartesian() const;
};

// Carrier wavenumber solving the exact dispersion relation:
// f(k) = (kz + sqrt(kz^2 + 2 q^2)) / 2. Throws std::domain_error when
// q = 0 and kz <= 0 (f must stay positive).
double dispersion_k0(const WaveVector& k);

// Exact helicity polarization for transverse magnitude q at azimuth varphi:
//   (e^{-i sigma varphi}/sqrt(2)) [ u_rho (1-t^2)/sqrt(1+t^4)
//                                   - i sigma u_phi
//                                   - u_z sqrt(2 t^2/(1+t^4)) ],  t = q/(k0 sqrt(2)).
// Unit norm and orthogonal to q + u_z k0 (1 - t^2) for every input; reduces
// to (u_x - i sigma u_y)/sqrt(2) at q = 0. Throws std::domain_error for
// k0 <= 0, q < 0 or sigma not in {-1, +1}.
PolarizationVector polarization(int sigma, double q, double varphi, double k0);

// Projection of a transverse amplitude function onto the Laguerre-Gauss
// basis, with the captured energy fraction per cumulative order.
struct LgDecomposition {
  angmom::AmplitudeSet set;
  double total_energy = 0.0;             // quadrature of |alpha_q|^2
  double captured_fraction = 0.0;        // at the requested max order
  std::vector<double> fraction_by_order; // cumulative, index = order N
};

// alpha_q is sampled at the quadrature nodes; coefficients are computed for
// every mode with 2p+|l| <= basis_orders at fixed (sigma, k0). Throws
// std::invalid_argument for basis_orders < 0 and a std::runtime_error
// quadrature-resolution failure if the captured fraction exceeds 1 beyond
// tolerance (the projection of a square-integrable function cannot carry
// more energy than the function).
LgDecomposition amplitudes_to_lg(const std::function<std::complex<double>(double, double)>& alpha_q,
                                 int basis_orders, int sigma, double k0_bin,
                                 const modes::BeamFrame& frame, const special::Quadrature2D& quad);

// Same, with a default momentum-space rule sized for basis_orders.
LgDecomposition amplitudes_to_lg(const std::function<std::complex<double>(double, double)>& alpha_q,
                                 int basis_orders, int sigma, double k0_bin,
                                 const modes::BeamFrame& frame);

}  // namespace oam::fieldsynth
