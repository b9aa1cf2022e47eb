#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oamphase/modes.hpp"
#include "oamphase/special.hpp"

using oam::special::build_quadrature;
using oam::special::gauss_legendre;
using oam::special::laguerre;
using oam::special::laguerre_eval;
using oam::special::log_norm_lg;

namespace {

using rational = boost::multiprecision::cpp_rational;

// Independent evaluation through the explicit alternating sum
//   L_p^a(x) = sum_k (-1)^k binom(p+a, p-k) x^k / k!
// in exact rational arithmetic; the double input converts to a rational with
// no rounding, so the only error in the comparison is the recurrence's own.
rational laguerre_exact(int p, int alpha, const rational& x) {
  rational sum = 0;
  for (int k = 0; k <= p; ++k) {
    rational binom = 1;
    for (int j = 1; j <= p - k; ++j) binom *= rational(alpha + k + j, j);
    rational power = 1;
    for (int j = 1; j <= k; ++j) power *= x / j;
    sum += ((k % 2 == 0) ? binom : -binom) * power;
  }
  return sum;
}

}  // namespace

TEST_CASE("laguerre matches exact rational evaluation across orders") {
  for (double x : {0.1, 1.0, 10.0}) {
    const rational exact_x(x);
    for (int p = 0; p <= 12; ++p) {
      for (int alpha = 0; alpha <= 12; ++alpha) {
        const double exact = static_cast<double>(laguerre_exact(p, alpha, exact_x));
        const double got = laguerre(p, alpha, x);
        const double scale = std::max(std::abs(exact), 1.0);
        CHECK(std::abs(got - exact) / scale < 1e-12);
      }
    }
  }
}

TEST_CASE("laguerre known values") {
  CHECK(laguerre(0, 0, 3.7) == 1.0);
  CHECK(laguerre(0, 5, 3.7) == 1.0);
  CHECK(laguerre(1, 2, 0.5) == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(laguerre(3, 2, 1.5) == doctest::Approx(0.0625).epsilon(1e-12));
  CHECK(laguerre(1, 0, 1.0) == doctest::Approx(0.0));
}

TEST_CASE("laguerre rejects negative indices") {
  CHECK_THROWS_AS(laguerre(-1, 0, 1.0), std::domain_error);
  CHECK_THROWS_AS(laguerre(2, -1, 1.0), std::domain_error);
}

TEST_CASE("laguerre_eval carries its inputs") {
  auto eval = laguerre_eval(3, 2, 1.5);
  CHECK(eval.p == 3);
  CHECK(eval.alpha == 2);
  CHECK(eval.x == 1.5);
  CHECK(eval.value == laguerre(3, 2, 1.5));
}

TEST_CASE("log_norm_lg reproduces small factorial normalizations") {
  CHECK(std::exp(log_norm_lg(0, 0)) == doctest::Approx(std::sqrt(2.0 / M_PI)).epsilon(1e-14));
  CHECK(std::exp(log_norm_lg(2, 1)) ==
        doctest::Approx(std::sqrt(2.0 * 1.0 / (M_PI * 6.0))).epsilon(1e-14));
  CHECK(std::exp(log_norm_lg(-2, 1)) == doctest::Approx(std::exp(log_norm_lg(2, 1))).epsilon(1e-15));
  CHECK_THROWS_AS(log_norm_lg(0, -1), std::domain_error);
}

TEST_CASE("log_norm_lg stays finite far beyond factorial overflow") {
  const double v = log_norm_lg(150, 80);
  CHECK(std::isfinite(v));
  CHECK(v < 0.0);
}

TEST_CASE("gauss_legendre integrates polynomials exactly") {
  std::vector<double> nodes, weights;
  gauss_legendre(16, nodes, weights);
  REQUIRE(nodes.size() == 16);

  double total = 0.0, quadratic = 0.0, cubic = 0.0, high = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    total += weights[i];
    quadratic += weights[i] * nodes[i] * nodes[i];
    cubic += weights[i] * nodes[i] * nodes[i] * nodes[i];
    high += weights[i] * std::pow(nodes[i], 30);
  }
  CHECK(total == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(quadratic == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(std::abs(cubic) < 1e-15);
  CHECK(high == doctest::Approx(2.0 / 31.0).epsilon(1e-13));  // degree 30 < 2*16 - 1
}

TEST_CASE("gauss_legendre nodes are ascending and symmetric") {
  std::vector<double> nodes, weights;
  gauss_legendre(21, nodes, weights);
  for (std::size_t i = 1; i < nodes.size(); ++i) CHECK(nodes[i] > nodes[i - 1]);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    CHECK(nodes[i] == doctest::Approx(-nodes[nodes.size() - 1 - i]).epsilon(1e-15));
    CHECK(weights[i] == doctest::Approx(weights[nodes.size() - 1 - i]).epsilon(1e-14));
  }
  CHECK(nodes[10] == 0.0);  // odd count pins the middle node at the origin
}

TEST_CASE("build_quadrature validates its inputs") {
  CHECK_THROWS_AS(build_quadrature(1.0, 15), std::invalid_argument);
  CHECK_THROWS_AS(build_quadrature(0.0, 32), std::invalid_argument);
  CHECK_THROWS_AS(build_quadrature(-2.0, 32), std::invalid_argument);

  auto quad = build_quadrature(3.0, 16);
  CHECK(quad.size() == 256);
  CHECK(quad.radius == 3.0);
  CHECK(quad.nodes_per_axis == 16);
  double area = 0.0;
  for (std::size_t i = 0; i < quad.size(); ++i) area += quad.w[i];
  CHECK(area == doctest::Approx(36.0).epsilon(1e-13));
}

TEST_CASE("build_quadrature integrates mode profiles to machine-level accuracy") {
  const oam::modes::BeamFrame frame(1.0, 2.0);
  auto quad = build_quadrature(6.0 * frame.w0, 96);

  double norm = 0.0;
  std::complex<double> cross = 0.0;
  for (std::size_t i = 0; i < quad.size(); ++i) {
    const double r = std::hypot(quad.x[i], quad.y[i]);
    const double phi = std::atan2(quad.y[i], quad.x[i]);
    const auto plus = oam::modes::lg_position({1, 0}, frame, r, phi, 0.0);
    const auto minus = oam::modes::lg_position({-1, 0}, frame, r, phi, 0.0);
    const auto gauss = oam::modes::lg_position({0, 0}, frame, r, phi, 0.0);
    norm += quad.w[i] * std::norm(gauss);
    cross += quad.w[i] * plus * std::conj(minus);
  }
  CHECK(std::abs(norm - 1.0) < 1e-10);
  CHECK(std::abs(cross) < 1e-10);
}
