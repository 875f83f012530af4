#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

namespace sgfem {

/// Polynomial of total degree <= 4 written in the barycentric coordinates
/// (l0, l1, l2) of a triangle, stored as coefficients of the monomials
/// l0^a l1^b l2^c with a + b + c <= 4.
///
/// The representation is not unique (l0 + l1 + l2 = 1), which is harmless:
/// values and derivatives are evaluated through the chain rule with the
/// element's constant barycentric gradients.
class BaryPoly {
 public:
  static constexpr int kMaxDegree = 4;
  static constexpr int kNumTerms = 35;

  using Coeffs = Eigen::Matrix<double, kNumTerms, 1>;

  BaryPoly() : c_(Coeffs::Zero()) {}

  static BaryPoly constant(double value);
  static BaryPoly lambda(int i);
  static BaryPoly monomial(int a, int b, int c, double coeff = 1.0);
  /// l0 l1 l2.
  static BaryPoly bubble();

  /// Index of monomial l0^a l1^b l2^c in the coefficient vector.
  static int index(int a, int b, int c);
  static const std::array<std::array<int, 3>, kNumTerms>& exponents();

  const Coeffs& coeffs() const { return c_; }
  Coeffs& coeffs() { return c_; }
  int degree() const;

  double value(const Eigen::Vector3d& l) const;
  /// Partial derivatives with respect to (l0, l1, l2).
  Eigen::Vector3d dlambda(const Eigen::Vector3d& l) const;
  Eigen::Matrix3d d2lambda(const Eigen::Vector3d& l) const;

  /// Physical gradient and Hessian given the 3x2 matrix G of grad l_i rows.
  Eigen::Vector2d gradient(const Eigen::Vector3d& l, const Eigen::Matrix<double, 3, 2>& G) const {
    return G.transpose() * dlambda(l);
  }
  Eigen::Matrix2d hessian(const Eigen::Vector3d& l, const Eigen::Matrix<double, 3, 2>& G) const {
    return G.transpose() * d2lambda(l) * G;
  }

  BaryPoly& operator+=(const BaryPoly& o) {
    c_ += o.c_;
    return *this;
  }
  BaryPoly& operator-=(const BaryPoly& o) {
    c_ -= o.c_;
    return *this;
  }
  BaryPoly& operator*=(double s) {
    c_ *= s;
    return *this;
  }

  friend BaryPoly operator+(BaryPoly a, const BaryPoly& b) { return a += b; }
  friend BaryPoly operator-(BaryPoly a, const BaryPoly& b) { return a -= b; }
  friend BaryPoly operator*(BaryPoly a, double s) { return a *= s; }
  friend BaryPoly operator*(double s, BaryPoly a) { return a *= s; }
  friend BaryPoly operator+(BaryPoly a, double s) { return a += constant(s); }
  friend BaryPoly operator-(BaryPoly a, double s) { return a -= constant(s); }
  friend BaryPoly operator-(double s, const BaryPoly& a) { return constant(s) - a; }
  /// Product; throws std::domain_error if the degree would exceed 4.
  friend BaryPoly operator*(const BaryPoly& a, const BaryPoly& b);

 private:
  Coeffs c_;
};

/// Values and lambda-derivatives of every monomial at a fixed set of
/// barycentric points. Row layout per point q (10 rows starting at 10 q):
/// value, d/dl0, d/dl1, d/dl2, d2/dl0dl0, d2/dl0dl1, d2/dl0dl2, d2/dl1dl1,
/// d2/dl1dl2, d2/dl2dl2. Shared by every element, since it does not depend
/// on geometry.
class MonomialTable {
 public:
  static constexpr int kRowsPerPoint = 10;

  explicit MonomialTable(const std::vector<std::array<double, 3>>& points);

  int num_points() const { return num_points_; }
  /// (10 * num_points) x 35.
  const Eigen::MatrixXd& matrix() const { return table_; }

 private:
  int num_points_;
  Eigen::MatrixXd table_;
};

}  // namespace sgfem
