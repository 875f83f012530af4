#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "sgfem/quadrature.hpp"

using namespace sgfem;

TEST_CASE("triangle rules integrate barycentric monomials exactly") {
  for (int d = 1; d <= 10; ++d) {
    CAPTURE(d);
    const TriangleRule& r = triangle_rule(d);
    CHECK(r.degree >= d);
    double wsum = 0.0;
    for (int q = 0; q < r.size(); ++q) {
      CHECK(r.weights[q] > 0.0);
      for (double l : r.points[q]) CHECK(l > 0.0);
      CHECK(r.points[q][0] + r.points[q][1] + r.points[q][2] == doctest::Approx(1.0).epsilon(1e-15));
      wsum += r.weights[q];
    }
    CHECK(wsum == doctest::Approx(1.0).epsilon(1e-15));
    for (int a = 0; a <= r.degree; ++a)
      for (int b = 0; a + b <= r.degree; ++b)
        for (int c = 0; a + b + c <= r.degree; ++c) {
          double s = 0.0;
          for (int q = 0; q < r.size(); ++q)
            s += r.weights[q] * std::pow(r.points[q][0], a) * std::pow(r.points[q][1], b) *
                 std::pow(r.points[q][2], c);
          CHECK(std::abs(s - oracle::bary_moment(a, b, c)) <= 1e-13 * oracle::bary_moment(a, b, c));
        }
  }
}

TEST_CASE("requests for degree 3 and 7 are served by positive rules") {
  CHECK(triangle_rule(3).degree == 4);
  CHECK(triangle_rule(7).degree == 8);
  CHECK(volume_rule().degree == 10);
  CHECK(volume_rule().size() == 25);
}

TEST_CASE("triangle rule range") {
  CHECK_THROWS_AS(triangle_rule(0), std::invalid_argument);
  CHECK_THROWS_AS(triangle_rule(11), std::invalid_argument);
}

TEST_CASE("edge rules") {
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    const EdgeRule& r = edge_rule(n);
    CHECK(r.size() == n);
    CHECK(r.degree == 2 * n - 1);
    for (int k = 0; k <= 2 * n - 1; ++k) {
      double s = 0.0;
      for (int q = 0; q < n; ++q) s += r.weights[q] * std::pow(r.points[q], k);
      CHECK(s == doctest::Approx(1.0 / (k + 1)).epsilon(1e-14));
    }
    // not exact one degree higher (Gauss optimality)
    double s = 0.0;
    for (int q = 0; q < n; ++q) s += r.weights[q] * std::pow(r.points[q], 2 * n);
    CHECK(std::abs(s - 1.0 / (2 * n + 1)) > 1e-8);
  }
  CHECK_THROWS_AS(edge_rule(0), std::invalid_argument);
  CHECK_THROWS_AS(edge_rule(7), std::invalid_argument);
}
