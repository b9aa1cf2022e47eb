#pragma once

#include <complex>
#include <vector>

namespace oam::angmom {

enum class SetKind { classical, one_photon };

// One spectral amplitude: polarization sigma, mode (l, p), carrier bin k0.
struct Amplitude {
  int sigma = +1;
  int l = 0;
  int p = 0;
  double k0 = 1.0;
  std::complex<double> value{};
};

// A discrete set of mode amplitudes. The k0 continuum is represented by the
// entries' distinct k0 values with trapezoidal bin widths; a single k0 value
// gets unit width, so single-frequency sets read as plain coefficient lists.
class AmplitudeSet {
 public:
  AmplitudeSet(SetKind kind, std::vector<Amplitude> entries);

  // Validating constructor for photon-number states: throws
  // std::invalid_argument unless sum |C|^2 dk0 = 1 within 1e-10.
  static AmplitudeSet one_photon(std::vector<Amplitude> entries);
  static AmplitudeSet classical(std::vector<Amplitude> entries);

  SetKind kind() const { return kind_; }
  const std::vector<Amplitude>& entries() const { return entries_; }

  // Trapezoidal width of the bin holding k0.
  double bin_width(double k0) const;

  // sum |amplitude|^2 dk0 over all entries.
  double weight() const;

 private:
  SetKind kind_;
  std::vector<Amplitude> entries_;
  std::vector<double> k0_grid_;   // sorted unique k0 values
  std::vector<double> k0_width_;  // matching trapezoidal widths

  void build_bins();
};

// Orbital angular momentum along z in hbar units: sum l |a|^2 dk0.
double orbital_z(const AmplitudeSet& a);

// Spin angular momentum along z in hbar units: sum sigma |a|^2 dk0.
double spin_z(const AmplitudeSet& a);

// Total paraxial beam energy in hbar = c = 1 units: sum k0 |a|^2 dk0.
// Defined for classical sets only; throws std::invalid_argument for
// one_photon input (photon states normalize per photon, not per beam).
double paraxial_energy(const AmplitudeSet& a);

// orbital_z / paraxial_energy: the beam's OAM per unit energy, which for a
// single (l, k0) mode is l/k0 (i.e. l hbar per photon). Classical only.
double oam_per_energy(const AmplitudeSet& a);

}  // namespace oam::angmom
