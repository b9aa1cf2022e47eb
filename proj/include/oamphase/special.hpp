#pragma once

#include <cstddef>
#include <vector>

namespace oam::special {

// Generalized Laguerre polynomial L_p^alpha(x) by the upward three-term
// recurrence, which stays stable where the alternating factorial sum cancels
// catastrophically. Throws std::domain_error for negative p or alpha.
double laguerre(int p, int alpha, double x);

// Evaluation record bundling the inputs with the value.
struct LaguerreEval {
  int p;
  int alpha;
  double x;
  double value;
};

LaguerreEval laguerre_eval(int p, int alpha, double x);

// log of the Laguerre-Gauss normalization sqrt(2 p! / (pi (|l|+p)!)),
// computed through lgamma so large indices neither overflow nor lose digits.
// Throws std::domain_error for p < 0.
double log_norm_lg(int l, int p);

// Tensor-product Gauss-Legendre rule on the square [-R, R]^2. Nodes and
// weights are stored flattened (size n*n, x-major).
struct Quadrature2D {
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> w;
  double radius = 0.0;
  int nodes_per_axis = 0;

  std::size_t size() const { return w.size(); }
};

// Throws std::invalid_argument if radius <= 0 or nodes_per_axis < 16.
Quadrature2D build_quadrature(double domain_radius, int nodes_per_axis);

// One-dimensional Gauss-Legendre nodes/weights on [-1, 1], ascending nodes.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace oam::special
