#pragma once

#include <array>
#include <stdexcept>
#include <vector>

namespace sgfem {

/// Symmetric rule on a triangle. Points are barycentric triples; weights are
/// normalized to sum to one, so an integral is `area * sum(w_q f(x_q))`.
struct TriangleRule {
  std::vector<std::array<double, 3>> points;
  std::vector<double> weights;
  int degree = 0;

  int size() const { return static_cast<int>(weights.size()); }
};

/// Gauss-Legendre rule on [0, 1]; weights sum to one.
struct EdgeRule {
  std::vector<double> points;
  std::vector<double> weights;
  int degree = 0;

  int size() const { return static_cast<int>(weights.size()); }
};

/// Positive-weight, fully symmetric rule with all points inside the
/// triangle, exact for polynomials of degree >= min_degree (1..10).
/// Throws std::invalid_argument outside that range.
const TriangleRule& triangle_rule(int min_degree);

/// n-point Gauss-Legendre rule, exact to degree 2n-1 (n = 1..6).
const EdgeRule& edge_rule(int n_points);

/// The rule used for every volume integral in assembly and error norms.
inline const TriangleRule& volume_rule() { return triangle_rule(10); }

}  // namespace sgfem
