#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "sgfem/manufactured.hpp"
#include "sgfem/quadrature.hpp"

using namespace sgfem;

namespace {

const double kE = std::exp(1.0);

}  // namespace

TEST_CASE("smooth field values and boundary behaviour") {
  const ManufacturedField u = example_smooth();
  CHECK(u.value({0.5, 0.5}).x() == doctest::Approx((std::exp(-1.0) - kE) * (std::exp(-1.0) - kE)));
  CHECK(std::abs(u.value({0.5, 0.5}).y()) <= 1e-14);
  CHECK(std::abs(u.gradient({0.0, 0.3})(1, 0)) <= 1e-14);
  for (double t : {0.0, 0.25, 0.6, 1.0}) {
    for (const Vec2& p : {Vec2(0, t), Vec2(1, t), Vec2(t, 0), Vec2(t, 1)}) {
      CHECK(u.value(p).norm() <= 1e-14);
      CHECK(u.gradient(p).norm() <= 1e-12);
    }
  }
}

TEST_CASE("layer field") {
  CHECK_THROWS_AS(example_layer(0.0), std::invalid_argument);
  CHECK_THROWS_AS(example_layer(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_example("bogus", 1.0), std::invalid_argument);

  for (double iota : {1.0, 1e-2, 1e-6}) {
    const ManufacturedField u = example_layer(iota);
    for (double t : {0.0, 0.5, 1.0}) {
      CHECK(u.value({0.0, t}).norm() <= 1e-12);
      CHECK(u.value({t, 1.0}).norm() <= 1e-12);
      // clamped: the normal derivative vanishes on the boundary too
      CHECK(std::abs(u.gradient({0.0, t})(0, 0)) <= 1e-10);
      CHECK(std::abs(u.gradient({t, 1.0})(1, 1)) <= 1e-10);
    }
  }
  // away from the boundary the layer terms die out for small iota
  const ManufacturedField thin = example_layer(1e-6);
  CHECK(thin.value({0.5, 0.5}).x() == doctest::Approx((kE - 1) * (kE - 1)).epsilon(1e-5));
  CHECK(thin.value({0.5, 0.5}).y() == doctest::Approx(1.0).epsilon(1e-5));
  for (int ax = 0; ax <= 4; ++ax)
    for (int ay = 0; ay + ax <= 4; ++ay) CHECK(std::isfinite(thin.d(0, ax, ay, {1e-7, 0.5})));
  CHECK_THROWS_AS(thin.d(0, 5, 0, {0.5, 0.5}), std::out_of_range);
}

TEST_CASE("one-dimensional derivatives agree with finite differences") {
  for (const ManufacturedField& u : {example_smooth(), example_layer(1.0), example_layer(0.1)}) {
    CAPTURE(u.name);
    for (int c = 0; c < 2; ++c)
      for (const Separable1D* f : {&u.X[c], &u.Y[c]})
        for (double t : {0.13, 0.5, 0.91})
          for (int k = 1; k <= 4; ++k) {
            const double fd = oracle::d1([&](double s) { return (*f)(k - 1, s); }, t, 1e-3);
            CHECK((*f)(k, t) == doctest::Approx(fd).epsilon(1e-7).scale(1.0));
          }
  }
}

TEST_CASE("source term matches a finite-difference reconstruction") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> uni(0.05, 0.95);
  const ManufacturedField zero{"zero",
                               {Separable1D{[](int, double) { return 0.0; }}, Separable1D{[](int, double) { return 0.0; }}},
                               {Separable1D{[](int, double) { return 0.0; }}, Separable1D{[](int, double) { return 0.0; }}}};
  CHECK(source(zero, {10, 1, 1})({0.3, 0.3}).norm() == 0.0);

  for (double iota : {1.0, 0.1}) {
    const MaterialParams mat{10, 1, iota};
    const double h_out = std::min(2.5e-3, iota / 8);
    for (const ManufacturedField& u : {example_smooth(), example_layer(iota)}) {
      const VectorField f = source(u, mat);
      std::vector<Vec2> pts(50);
      double fmax = 0.0;
      for (auto& p : pts) {
        p = Vec2(uni(rng), uni(rng));
        fmax = std::max(fmax, f(p).norm());
      }
      double worst = 0.0;
      for (const auto& p : pts) {
        const Vec2 fa = f(p);
        const Vec2 fd = oracle::source_fd(u, mat, p, h_out / 2, h_out);
        worst = std::max(worst, (fa - fd).norm() / std::max(fa.norm(), 1e-2 * fmax));
      }
      CAPTURE(u.name);
      CAPTURE(iota);
      CHECK(worst <= 1e-4);
    }
  }
}

TEST_CASE("weak form consistency") {
  // v = s(x) s(y) (1, -1/2) with s(t) = t^2 (1 - t)^2 is clamped on the square.
  auto s = [](int k, double t) {
    switch (k) {
      case 0: return t * t * (1 - t) * (1 - t);
      case 1: return 2 * t * (1 - t) * (1 - 2 * t);
      case 2: return 2 - 12 * t + 12 * t * t;
      default: return -12 + 24 * t;
    }
  };
  const MaterialParams mat{10, 1, 0.5};
  const ManufacturedField u = example_smooth();
  const VectorField f = source(u, mat);
  const Vec2 dir(1.0, -0.5);

  const EdgeRule& r = edge_rule(6);
  const int cells = 24;
  double lhs = 0.0, rhs = 0.0;
  for (int ci = 0; ci < cells; ++ci)
    for (int cj = 0; cj < cells; ++cj)
      for (int qi = 0; qi < r.size(); ++qi)
        for (int qj = 0; qj < r.size(); ++qj) {
          const double x = (ci + r.points[qi]) / cells, y = (cj + r.points[qj]) / cells;
          const double w = r.weights[qi] * r.weights[qj] / (cells * cells);
          const Vec2 p(x, y);
          rhs += w * f(p).dot(dir) * s(0, x) * s(0, y);

          auto du = [&](int c, int ax, int ay) { return u.d(c, ax, ay, p); };
          auto dv = [&](int c, int ax, int ay) { return dir[c] * s(ax, x) * s(ay, y); };
          // zeroth-order part plus iota^2 times the x and y derivatives of it
          auto energy = [&](int ex, int ey) {
            const double divU = du(0, 1 + ex, ey) + du(1, ex, 1 + ey);
            const double divV = dv(0, 1 + ex, ey) + dv(1, ex, 1 + ey);
            const double e11 = du(0, 1 + ex, ey) * dv(0, 1 + ex, ey);
            const double e22 = du(1, ex, 1 + ey) * dv(1, ex, 1 + ey);
            const double e12 =
                0.5 * (du(0, ex, 1 + ey) + du(1, 1 + ex, ey)) * (dv(0, ex, 1 + ey) + dv(1, 1 + ex, ey));
            return mat.lambda * divU * divV + 2 * mat.mu * (e11 + e22 + e12);
          };
          lhs += w * (energy(0, 0) + mat.iota * mat.iota * (energy(1, 0) + energy(0, 1)));
        }
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-11));
}

TEST_CASE("g is consistent with its definition") {
  const ManufacturedField u = example_layer(0.3);
  const MaterialParams mat{2.0, 0.7, 0.3};
  const Vec2 p(0.21, 0.64);
  const Vec2 g = source_g(u, mat, p);
  const double lm = mat.lambda + mat.mu;
  const Vec2 expect(mat.mu * (u.d(0, 2, 0, p) + u.d(0, 0, 2, p)) + lm * (u.d(0, 2, 0, p) + u.d(1, 1, 1, p)),
                    mat.mu * (u.d(1, 2, 0, p) + u.d(1, 0, 2, p)) + lm * (u.d(0, 1, 1, p) + u.d(1, 0, 2, p)));
  CHECK((g - expect).norm() <= 1e-12 * expect.norm());
}
