#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "sgfem/bary_poly.hpp"
#include "sgfem/mesh.hpp"

namespace sgfem {

enum class ElementKind { NTW, Specht, Morley };

std::string to_string(ElementKind kind);
/// Accepts "ntw", "specht", "morley" (case-insensitive).
ElementKind parse_element_kind(std::string_view name);

/// Number of scalar shape functions per element.
int local_size(ElementKind kind);

class ElementError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class DofEntity { Vertex, Midpoint, Edge };

enum class DofKind {
  Value,       // point value
  DerivX,      // d/dx at a vertex
  DerivY,      // d/dy at a vertex
  NormalMean,  // mean over the edge of sign * d/dn (outward n)
  MedianMean,  // mean over e_i of (m_i . grad), m_i = b_i - a_i
};

struct DofDescriptor {
  DofEntity entity = DofEntity::Vertex;
  int index = 0;  // local vertex or local edge number
  DofKind kind = DofKind::Value;
  int sign = 1;   // orientation for NormalMean DOFs
};

/// Scalar function with gradient, in physical coordinates.
struct ScalarFunction {
  std::function<double(const Vec2&)> value;
  std::function<Vec2(const Vec2&)> gradient;
};

/// Shape values and physical derivatives at a set of points:
/// each matrix is n_loc x n_points.
struct ShapeTable {
  Eigen::MatrixXd value, dx, dy, dxx, dxy, dyy;
};

/// The scalar shape functions of one element family on one triangle,
/// dual to `dofs()`.
class LocalBasis {
 public:
  LocalBasis() = default;
  LocalBasis(ElementKind kind, const ElementGeometry& geom, std::vector<BaryPoly> shapes,
             std::vector<DofDescriptor> dofs);

  ElementKind kind() const { return kind_; }
  const ElementGeometry& geometry() const { return geom_; }
  int size() const { return static_cast<int>(shapes_.size()); }
  const BaryPoly& shape(int j) const { return shapes_[j]; }
  const std::vector<BaryPoly>& shapes() const { return shapes_; }
  const std::vector<DofDescriptor>& dofs() const { return dofs_; }

  double value(int j, const Eigen::Vector3d& l) const { return shapes_[j].value(l); }
  Vec2 gradient(int j, const Eigen::Vector3d& l) const { return shapes_[j].gradient(l, G_); }
  Mat2 hessian(int j, const Eigen::Vector3d& l) const { return shapes_[j].hessian(l, G_); }

  /// All shapes at the points of `table` in one matrix product.
  ShapeTable tabulate(const MonomialTable& table) const;

 private:
  ElementKind kind_ = ElementKind::NTW;
  ElementGeometry geom_;
  Eigen::Matrix<double, 3, 2> G_ = Eigen::Matrix<double, 3, 2>::Zero();
  std::vector<BaryPoly> shapes_;
  std::vector<DofDescriptor> dofs_;
  Eigen::MatrixXd coeffs_;  // n_loc x 35
};

/// Applies one degree of freedom to a function. Edge means use an
/// `edge_points`-point Gauss rule.
double apply_dof(const DofDescriptor& dof, const ElementGeometry& geom, const ScalarFunction& f,
                 int edge_points = 3);
double apply_dof(const DofDescriptor& dof, const ElementGeometry& geom, const BaryPoly& p,
                 int edge_points = 3);

/// Matrix D with D(i, j) = dof_i(shape_j); the identity for a dual basis.
Eigen::MatrixXd duality_matrix(const LocalBasis& basis);

/// DOF values of f, i.e. the coefficients of its interpolant.
Eigen::VectorXd interpolate(const LocalBasis& basis, const ScalarFunction& f, int edge_points = 6);
double evaluate(const LocalBasis& basis, const Eigen::VectorXd& coeffs, const Eigen::Vector3d& l);

ScalarFunction as_function(const BaryPoly& p, const ElementGeometry& geom);

/// NTW element: P2 + b_K P1 with vertex values, midpoint values and mean
/// normal derivatives. Order: a0 a1 a2, b0 b1 b2, e0 e1 e2. Edge moment i
/// is taken along edge_sign[i] times the outward normal.
LocalBasis ntw_basis(const ElementGeometry& geom);
/// Same space with the third DOF replaced by the mean of (m_i . grad).
LocalBasis ntw_affine_basis(const ElementGeometry& geom);
/// Specht triangle: Zienkiewicz space + b_K P1, vertex values and gradients,
/// with the second-Legendre normal moments on every edge forced to zero.
/// Order: (v, dx, dy) at a0, a1, a2.
LocalBasis specht_basis(const ElementGeometry& geom);
/// Morley triangle: P2 with vertex values and mean normal derivatives.
/// Order: a0 a1 a2, e0 e1 e2.
LocalBasis morley_basis(const ElementGeometry& geom);
LocalBasis make_basis(ElementKind kind, const ElementGeometry& geom);

/// Linear interpolant on vertex values as a map from local coefficients:
/// row i gives the value at vertex a_i, so pi_1 v = sum_i (P c)_i l_i.
using Pi1Map = Eigen::Matrix<double, 3, Eigen::Dynamic>;
Pi1Map pi1_map(const LocalBasis& basis);
Pi1Map pi1_map(const ElementGeometry& geom);

/// max |Pi_K v - Pi~_K v| over a barycentric grid with `grid` subdivisions.
double verify_affine_identity(const ElementGeometry& geom, const ScalarFunction& v,
                              int grid = 12);

}  // namespace sgfem
