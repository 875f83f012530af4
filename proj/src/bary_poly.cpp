#include "sgfem/bary_poly.hpp"

#include <stdexcept>

namespace sgfem {

namespace {

struct ExponentTable {
  std::array<std::array<int, 3>, BaryPoly::kNumTerms> exps{};
  std::array<std::array<std::array<int, 5>, 5>, 5> lookup{};

  ExponentTable() {
    int n = 0;
    for (auto& plane : lookup)
      for (auto& row : plane) row.fill(-1);
    for (int d = 0; d <= BaryPoly::kMaxDegree; ++d) {
      for (int a = d; a >= 0; --a) {
        for (int b = d - a; b >= 0; --b) {
          int c = d - a - b;
          exps[n] = {a, b, c};
          lookup[a][b][c] = n++;
        }
      }
    }
  }
};

const ExponentTable& table() {
  static const ExponentTable t;
  return t;
}

double ipow(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

// d^k/dx^k x^n evaluated at x, k <= 2.
double dpow(double x, int n, int k) {
  if (k > n) return 0.0;
  double f = 1.0;
  for (int i = 0; i < k; ++i) f *= (n - i);
  return f * ipow(x, n - k);
}

}  // namespace

int BaryPoly::index(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0 || a + b + c > kMaxDegree) {
    throw std::domain_error("barycentric monomial exceeds degree 4");
  }
  return table().lookup[a][b][c];
}

const std::array<std::array<int, 3>, BaryPoly::kNumTerms>& BaryPoly::exponents() {
  return table().exps;
}

BaryPoly BaryPoly::constant(double value) { return monomial(0, 0, 0, value); }

BaryPoly BaryPoly::lambda(int i) {
  return monomial(i == 0 ? 1 : 0, i == 1 ? 1 : 0, i == 2 ? 1 : 0);
}

BaryPoly BaryPoly::monomial(int a, int b, int c, double coeff) {
  BaryPoly p;
  p.c_[index(a, b, c)] = coeff;
  return p;
}

BaryPoly BaryPoly::bubble() { return monomial(1, 1, 1); }

int BaryPoly::degree() const {
  int d = -1;
  const auto& e = exponents();
  for (int n = 0; n < kNumTerms; ++n) {
    if (c_[n] != 0.0) d = std::max(d, e[n][0] + e[n][1] + e[n][2]);
  }
  return d;
}

double BaryPoly::value(const Eigen::Vector3d& l) const {
  const auto& e = exponents();
  double v = 0.0;
  for (int n = 0; n < kNumTerms; ++n) {
    if (c_[n] == 0.0) continue;
    v += c_[n] * ipow(l[0], e[n][0]) * ipow(l[1], e[n][1]) * ipow(l[2], e[n][2]);
  }
  return v;
}

Eigen::Vector3d BaryPoly::dlambda(const Eigen::Vector3d& l) const {
  const auto& e = exponents();
  Eigen::Vector3d g = Eigen::Vector3d::Zero();
  for (int n = 0; n < kNumTerms; ++n) {
    if (c_[n] == 0.0) continue;
    for (int m = 0; m < 3; ++m) {
      double t = c_[n];
      for (int r = 0; r < 3; ++r) t *= dpow(l[r], e[n][r], r == m ? 1 : 0);
      g[m] += t;
    }
  }
  return g;
}

Eigen::Matrix3d BaryPoly::d2lambda(const Eigen::Vector3d& l) const {
  const auto& e = exponents();
  Eigen::Matrix3d h = Eigen::Matrix3d::Zero();
  for (int n = 0; n < kNumTerms; ++n) {
    if (c_[n] == 0.0) continue;
    for (int m = 0; m < 3; ++m) {
      for (int p = m; p < 3; ++p) {
        double t = c_[n];
        for (int r = 0; r < 3; ++r) t *= dpow(l[r], e[n][r], (r == m) + (r == p));
        h(m, p) += t;
      }
    }
  }
  for (int m = 0; m < 3; ++m)
    for (int p = 0; p < m; ++p) h(m, p) = h(p, m);
  return h;
}

BaryPoly operator*(const BaryPoly& a, const BaryPoly& b) {
  const auto& e = BaryPoly::exponents();
  BaryPoly r;
  for (int i = 0; i < BaryPoly::kNumTerms; ++i) {
    if (a.c_[i] == 0.0) continue;
    for (int j = 0; j < BaryPoly::kNumTerms; ++j) {
      if (b.c_[j] == 0.0) continue;
      int k = BaryPoly::index(e[i][0] + e[j][0], e[i][1] + e[j][1], e[i][2] + e[j][2]);
      r.c_[k] += a.c_[i] * b.c_[j];
    }
  }
  return r;
}

MonomialTable::MonomialTable(const std::vector<std::array<double, 3>>& points)
    : num_points_(static_cast<int>(points.size())),
      table_(kRowsPerPoint * points.size(), BaryPoly::kNumTerms) {
  for (int q = 0; q < num_points_; ++q) {
    Eigen::Vector3d l(points[q][0], points[q][1], points[q][2]);
    for (int n = 0; n < BaryPoly::kNumTerms; ++n) {
      BaryPoly m;
      m.coeffs()[n] = 1.0;
      Eigen::Vector3d d1 = m.dlambda(l);
      Eigen::Matrix3d d2 = m.d2lambda(l);
      int row = kRowsPerPoint * q;
      table_(row + 0, n) = m.value(l);
      table_(row + 1, n) = d1[0];
      table_(row + 2, n) = d1[1];
      table_(row + 3, n) = d1[2];
      table_(row + 4, n) = d2(0, 0);
      table_(row + 5, n) = d2(0, 1);
      table_(row + 6, n) = d2(0, 2);
      table_(row + 7, n) = d2(1, 1);
      table_(row + 8, n) = d2(1, 2);
      table_(row + 9, n) = d2(2, 2);
    }
  }
}

}  // namespace sgfem
