#include "oamphase/angmom.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oam::angmom {

AmplitudeSet::AmplitudeSet(SetKind kind, std::vector<Amplitude> entries)
    : kind_(kind), entries_(std::move(entries)) {
  for (const auto& e : entries_) {
    if (!(e.k0 > 0.0)) throw std::invalid_argument("AmplitudeSet: k0 bins must be positive");
    if (e.p < 0) throw std::invalid_argument("AmplitudeSet: radial index p must be non-negative");
    if (e.sigma != 1 && e.sigma != -1)
      throw std::invalid_argument("AmplitudeSet: sigma must be +1 or -1");
  }
  build_bins();
  if (kind_ == SetKind::one_photon) {
    const double w = weight();
    if (std::abs(w - 1.0) > 1e-10)
      throw std::invalid_argument("AmplitudeSet: one-photon set must have unit weight, got " +
                                  std::to_string(w));
  }
}

AmplitudeSet AmplitudeSet::one_photon(std::vector<Amplitude> entries) {
  return AmplitudeSet(SetKind::one_photon, std::move(entries));
}

AmplitudeSet AmplitudeSet::classical(std::vector<Amplitude> entries) {
  return AmplitudeSet(SetKind::classical, std::move(entries));
}

void AmplitudeSet::build_bins() {
  k0_grid_.clear();
  for (const auto& e : entries_) k0_grid_.push_back(e.k0);
  std::sort(k0_grid_.begin(), k0_grid_.end());
  k0_grid_.erase(std::unique(k0_grid_.begin(), k0_grid_.end()), k0_grid_.end());

  const std::size_t n = k0_grid_.size();
  k0_width_.assign(n, 1.0);  // a single bin represents a unit-width line
  if (n >= 2) {
    for (std::size_t i = 0; i < n; ++i) {
      const double lo = (i == 0) ? k0_grid_[0] : (k0_grid_[i - 1] + k0_grid_[i]) / 2.0;
      const double hi = (i + 1 == n) ? k0_grid_[n - 1] : (k0_grid_[i] + k0_grid_[i + 1]) / 2.0;
      k0_width_[i] = hi - lo;
    }
  }
}

double AmplitudeSet::bin_width(double k0) const {
  auto it = std::lower_bound(k0_grid_.begin(), k0_grid_.end(), k0);
  if (it == k0_grid_.end() || *it != k0)
    throw std::invalid_argument("AmplitudeSet: k0 value not present in the set");
  return k0_width_[static_cast<std::size_t>(it - k0_grid_.begin())];
}

double AmplitudeSet::weight() const {
  double w = 0.0;
  for (const auto& e : entries_) w += std::norm(e.value) * bin_width(e.k0);
  return w;
}

double orbital_z(const AmplitudeSet& a) {
  double sum = 0.0;
  for (const auto& e : a.entries()) sum += e.l * std::norm(e.value) * a.bin_width(e.k0);
  return sum;
}

double spin_z(const AmplitudeSet& a) {
  double sum = 0.0;
  for (const auto& e : a.entries()) sum += e.sigma * std::norm(e.value) * a.bin_width(e.k0);
  return sum;
}

double paraxial_energy(const AmplitudeSet& a) {
  if (a.kind() == SetKind::one_photon)
    throw std::invalid_argument(
        "paraxial_energy: defined for classical sets; a photon state has energy k0 per line, not a "
        "beam total");
  double sum = 0.0;
  for (const auto& e : a.entries()) sum += e.k0 * std::norm(e.value) * a.bin_width(e.k0);
  return sum;
}

double oam_per_energy(const AmplitudeSet& a) {
  const double h = paraxial_energy(a);
  if (h == 0.0) throw std::invalid_argument("oam_per_energy: set carries no energy");
  return orbital_z(a) / h;
}

}  // namespace oam::angmom
