#include <cmath>
#include <complex>
#include <stdexcept>

#include "doctest.h"
#include "oamphase/angmom.hpp"

using oam::angmom::Amplitude;
using oam::angmom::AmplitudeSet;
using oam::angmom::SetKind;

TEST_CASE("orbital component counts charge per unit weight") {
  const auto single = AmplitudeSet::classical({{+1, 3, 0, 2.0, 1.0}});
  CHECK(oam::angmom::orbital_z(single) == doctest::Approx(3.0).epsilon(1e-14));

  const auto balanced =
      AmplitudeSet::classical({{+1, 1, 0, 2.0, {0.0, 1.0}}, {+1, -1, 0, 2.0, {1.0, 0.0}}});
  CHECK(std::abs(oam::angmom::orbital_z(balanced)) < 1e-14);

  const auto mixed =
      AmplitudeSet::classical({{+1, 2, 0, 2.0, 0.5}, {+1, -1, 0, 2.0, std::sqrt(0.75)}});
  CHECK(oam::angmom::orbital_z(mixed) == doctest::Approx(-0.25).epsilon(1e-13));
}

TEST_CASE("spin component weighs helicities") {
  const auto set = AmplitudeSet::classical(
      {{+1, 0, 0, 2.0, std::sqrt(0.9)}, {-1, 0, 0, 2.0, std::sqrt(0.1)}});
  CHECK(oam::angmom::spin_z(set) == doctest::Approx(0.8).epsilon(1e-13));
}

TEST_CASE("observables ignore a global phase") {
  const std::complex<double> phase = std::polar(1.0, 1.234);
  std::vector<Amplitude> plain = {{+1, 2, 1, 2.0, 0.6}, {-1, -1, 0, 2.0, {0.0, 0.8}}};
  std::vector<Amplitude> shifted = plain;
  for (auto& e : shifted) e.value *= phase;

  const auto a = AmplitudeSet::classical(plain);
  const auto b = AmplitudeSet::classical(shifted);
  CHECK(oam::angmom::orbital_z(a) == doctest::Approx(oam::angmom::orbital_z(b)).epsilon(1e-14));
  CHECK(oam::angmom::spin_z(a) == doctest::Approx(oam::angmom::spin_z(b)).epsilon(1e-14));
  CHECK(oam::angmom::paraxial_energy(a) ==
        doctest::Approx(oam::angmom::paraxial_energy(b)).epsilon(1e-14));
}

TEST_CASE("single-frequency bins have unit width") {
  const auto set = AmplitudeSet::classical({{+1, 0, 0, 3.5, 2.0}});
  CHECK(set.bin_width(3.5) == 1.0);
  CHECK(set.weight() == doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("multi-frequency bins are trapezoidal over the sorted grid") {
  const auto set = AmplitudeSet::classical(
      {{+1, 0, 0, 1.0, 1.0}, {+1, 0, 0, 2.0, 1.0}, {+1, 0, 0, 4.0, 1.0}});
  CHECK(set.bin_width(1.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(set.bin_width(2.0) == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(set.bin_width(4.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(set.weight() == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("paraxial energy averages the carrier over the spectrum") {
  const auto single = AmplitudeSet::classical({{+1, 0, 0, 2.0, 1.0}});
  CHECK(oam::angmom::paraxial_energy(single) == doctest::Approx(2.0).epsilon(1e-14));

  // Two equal-weight bins at k0 and 2 k0 average to 1.5 k0 per unit weight.
  const double k0 = 2.0;
  const double amp = std::sqrt(1.0 / k0);  // each bin then carries weight 1/2
  const auto two = AmplitudeSet::classical({{+1, 0, 0, k0, amp}, {+1, 0, 0, 2.0 * k0, amp}});
  CHECK(two.weight() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(oam::angmom::paraxial_energy(two) == doctest::Approx(1.5 * k0).epsilon(1e-13));
}

TEST_CASE("charge per unit energy reduces to l over k0 for a pure mode") {
  const auto set = AmplitudeSet::classical({{+1, 2, 0, 2.0, 0.7}});
  CHECK(oam::angmom::oam_per_energy(set) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("photon-number sets must be normalized") {
  const auto ok = AmplitudeSet::one_photon(
      {{+1, 1, 0, 2.0, std::sqrt(0.5)}, {-1, 2, 1, 2.0, std::sqrt(0.5)}});
  CHECK(ok.kind() == SetKind::one_photon);
  CHECK(std::abs(ok.weight() - 1.0) < 1e-10);

  CHECK_THROWS_AS(AmplitudeSet::one_photon({{+1, 1, 0, 2.0, 0.5}}), std::invalid_argument);
  CHECK_THROWS_AS(AmplitudeSet::one_photon({}), std::invalid_argument);
}

TEST_CASE("beam energy is undefined for photon-number sets") {
  const auto photon = AmplitudeSet::one_photon({{+1, 1, 0, 2.0, 1.0}});
  CHECK_THROWS_AS(oam::angmom::paraxial_energy(photon), std::invalid_argument);
  CHECK_THROWS_AS(oam::angmom::oam_per_energy(photon), std::invalid_argument);
  CHECK(oam::angmom::orbital_z(photon) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("entries are validated on construction") {
  CHECK_THROWS_AS(AmplitudeSet::classical({{+1, 0, -1, 2.0, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(AmplitudeSet::classical({{+1, 0, 0, 0.0, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(AmplitudeSet::classical({{+2, 0, 0, 2.0, 1.0}}), std::invalid_argument);

  const auto empty = AmplitudeSet::classical({});
  CHECK(empty.weight() == 0.0);
  CHECK(oam::angmom::orbital_z(empty) == 0.0);
}
