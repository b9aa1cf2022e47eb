#include "oamphase/special.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace oam::special {

double laguerre(int p, int alpha, double x) {
  if (p < 0) throw std::domain_error("laguerre: negative degree p = " + std::to_string(p));
  if (alpha < 0) throw std::domain_error("laguerre: negative order alpha = " + std::to_string(alpha));
  if (p == 0) return 1.0;
  double lm2 = 1.0;
  double lm1 = 1.0 + alpha - x;
  for (int k = 2; k <= p; ++k) {
    double lk = ((2.0 * k - 1.0 + alpha - x) * lm1 - (k - 1.0 + alpha) * lm2) / k;
    lm2 = lm1;
    lm1 = lk;
  }
  return lm1;
}

LaguerreEval laguerre_eval(int p, int alpha, double x) { return {p, alpha, x, laguerre(p, alpha, x)}; }

double log_norm_lg(int l, int p) {
  if (p < 0) throw std::domain_error("log_norm_lg: negative radial index p = " + std::to_string(p));
  int al = std::abs(l);
  return 0.5 * (std::log(2.0) + std::lgamma(p + 1.0) - std::log(M_PI) - std::lgamma(al + p + 1.0));
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi-style initial guess, then Newton on P_n.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 0; k < n; ++k) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k + 1.0) * x * p1 - k * p2) / (k + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) nodes[n / 2] = 0.0;  // exact midpoint for odd rules
}

Quadrature2D build_quadrature(double domain_radius, int nodes_per_axis) {
  if (domain_radius <= 0.0)
    throw std::invalid_argument("build_quadrature: domain radius must be positive");
  if (nodes_per_axis < 16)
    throw std::invalid_argument("build_quadrature: need at least 16 nodes per axis, got " +
                                std::to_string(nodes_per_axis));
  std::vector<double> n1, w1;
  gauss_legendre(nodes_per_axis, n1, w1);

  Quadrature2D quad;
  quad.radius = domain_radius;
  quad.nodes_per_axis = nodes_per_axis;
  std::size_t total = static_cast<std::size_t>(nodes_per_axis) * nodes_per_axis;
  quad.x.reserve(total);
  quad.y.reserve(total);
  quad.w.reserve(total);
  for (int i = 0; i < nodes_per_axis; ++i) {
    for (int j = 0; j < nodes_per_axis; ++j) {
      quad.x.push_back(domain_radius * n1[i]);
      quad.y.push_back(domain_radius * n1[j]);
      quad.w.push_back(domain_radius * domain_radius * w1[i] * w1[j]);
    }
  }
  return quad;
}

}  // namespace oam::special
