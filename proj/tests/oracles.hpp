#pragma once

// Reference computations that share no code with the library paths they
// check.

#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "sgfem/assembly.hpp"
#include "sgfem/manufactured.hpp"

namespace oracle {

inline double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/// Integral of l0^a l1^b l2^c over a triangle of unit area.
inline double bary_moment(int a, int b, int c) {
  return 2.0 * factorial(a) * factorial(b) * factorial(c) / factorial(a + b + c + 2);
}

/// Gaussian elimination with partial pivoting on a dense copy.
inline std::vector<double> dense_solve(std::vector<std::vector<double>> A, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(A[i][k]) > std::abs(A[p][k])) p = i;
    if (A[p][k] == 0.0) throw std::runtime_error("singular matrix");
    std::swap(A[k], A[p]);
    std::swap(b[k], b[p]);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double m = A[i][k] / A[k][k];
      for (std::size_t j = k; j < n; ++j) A[i][j] -= m * A[k][j];
      b[i] -= m * b[k];
    }
  }
  std::vector<double> x(n);
  for (std::size_t k = n; k-- > 0;) {
    double s = b[k];
    for (std::size_t j = k + 1; j < n; ++j) s -= A[k][j] * x[j];
    x[k] = s / A[k][k];
  }
  return x;
}

/// Fourth-order central first derivative.
template <class F>
double d1(const F& f, double x, double h) {
  return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
}

/// Fourth-order central second derivative.
template <class F>
double d2(const F& f, double x, double h) {
  return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)) / (12 * h * h);
}

/// Source term from u alone: five-point stencils for the second
/// derivatives of u (step h_in), then again on g (step h_out).
inline sgfem::Vec2 source_fd(const sgfem::ManufacturedField& u, const sgfem::MaterialParams& m,
                             const sgfem::Vec2& p, double h_in, double h_out) {
  using sgfem::Vec2;
  auto comp = [&](int c) { return [&u, c](double x, double y) { return u.d(c, 0, 0, Vec2(x, y)); }; };
  auto g = [&](double x, double y) {
    auto u1 = comp(0), u2 = comp(1);
    const double u1xx = d2([&](double s) { return u1(s, y); }, x, h_in);
    const double u1yy = d2([&](double s) { return u1(x, s); }, y, h_in);
    const double u2xx = d2([&](double s) { return u2(s, y); }, x, h_in);
    const double u2yy = d2([&](double s) { return u2(x, s); }, y, h_in);
    const double u1xy = d1([&](double s) { return d1([&](double t) { return u1(t, s); }, x, h_in); }, y, h_in);
    const double u2xy = d1([&](double s) { return d1([&](double t) { return u2(t, s); }, x, h_in); }, y, h_in);
    const double lm = m.lambda + m.mu;
    return Vec2(m.mu * (u1xx + u1yy) + lm * (u1xx + u2xy), m.mu * (u2xx + u2yy) + lm * (u1xy + u2yy));
  };
  Vec2 lap;
  for (int c = 0; c < 2; ++c) {
    lap[c] = d2([&](double s) { return g(s, p.y())[c]; }, p.x(), h_out) +
             d2([&](double s) { return g(p.x(), s)[c]; }, p.y(), h_out);
  }
  return m.iota * m.iota * lap - g(p.x(), p.y());
}

}  // namespace oracle
