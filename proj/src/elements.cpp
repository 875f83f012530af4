#include "sgfem/elements.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "sgfem/quadrature.hpp"

namespace sgfem {

namespace {

Eigen::Vector3d vertex_bary(int i) {
  Eigen::Vector3d l = Eigen::Vector3d::Zero();
  l[i] = 1.0;
  return l;
}

// Point at parameter t on edge e_i, running a_{i+1} -> a_{i+2}.
Eigen::Vector3d edge_bary(int i, double t) {
  Eigen::Vector3d l = Eigen::Vector3d::Zero();
  l[(i + 1) % 3] = 1.0 - t;
  l[(i + 2) % 3] = t;
  return l;
}

Vec2 dof_direction(const DofDescriptor& dof, const ElementGeometry& g) {
  const int i = dof.index;
  if (dof.kind == DofKind::NormalMean) return dof.sign * g.normal[i];
  return g.midpoint[i] - g.vertices[i];  // MedianMean
}

Eigen::Vector3d entity_point(const DofDescriptor& dof) {
  if (dof.entity == DofEntity::Midpoint) return edge_bary(dof.index, 0.5);
  return vertex_bary(dof.index);
}

// Solves for the dual basis inside span(span) of the first n_dofs
// functionals, subject to the remaining functionals vanishing.
std::vector<BaryPoly> dualize(const std::vector<BaryPoly>& span,
                              const std::vector<std::function<double(const BaryPoly&)>>& functionals,
                              const std::vector<double>& row_scale, int n_dofs,
                              std::string_view family) {
  const int n = static_cast<int>(span.size());
  Eigen::MatrixXd M(n, n);
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s) M(r, s) = row_scale[r] * functionals[r](span[s]);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(M);
  if (lu.rcond() < 1e-13) {
    std::ostringstream msg;
    msg << family << " local system is singular (rcond " << lu.rcond() << ")";
    throw ElementError(msg.str());
  }
  Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(n, n_dofs);
  for (int j = 0; j < n_dofs; ++j) rhs(j, j) = row_scale[j];
  Eigen::MatrixXd C = lu.solve(rhs);
  std::vector<BaryPoly> shapes(n_dofs);
  for (int j = 0; j < n_dofs; ++j)
    for (int s = 0; s < n; ++s) shapes[j] += C(s, j) * span[s];
  return shapes;
}

std::vector<BaryPoly> p2_span() {
  return {BaryPoly::monomial(2, 0, 0), BaryPoly::monomial(0, 2, 0), BaryPoly::monomial(0, 0, 2),
          BaryPoly::monomial(1, 1, 0), BaryPoly::monomial(0, 1, 1), BaryPoly::monomial(1, 0, 1)};
}

}  // namespace

std::string to_string(ElementKind kind) {
  switch (kind) {
    case ElementKind::NTW: return "ntw";
    case ElementKind::Specht: return "specht";
    case ElementKind::Morley: return "morley";
  }
  return "?";
}

ElementKind parse_element_kind(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "ntw") return ElementKind::NTW;
  if (s == "specht") return ElementKind::Specht;
  if (s == "morley") return ElementKind::Morley;
  throw std::invalid_argument("unknown element '" + std::string(name) +
                              "' (expected ntw, specht or morley)");
}

int local_size(ElementKind kind) { return kind == ElementKind::Morley ? 6 : 9; }

LocalBasis::LocalBasis(ElementKind kind, const ElementGeometry& geom, std::vector<BaryPoly> shapes,
                       std::vector<DofDescriptor> dofs)
    : kind_(kind),
      geom_(geom),
      G_(geom.grad_lambda_matrix()),
      shapes_(std::move(shapes)),
      dofs_(std::move(dofs)),
      coeffs_(shapes_.size(), BaryPoly::kNumTerms) {
  for (int j = 0; j < size(); ++j) coeffs_.row(j) = shapes_[j].coeffs().transpose();
}

ShapeTable LocalBasis::tabulate(const MonomialTable& table) const {
  const int nq = table.num_points();
  const int n = size();
  // n x (10 nq)
  Eigen::MatrixXd A = coeffs_ * table.matrix().transpose();
  ShapeTable t;
  t.value.resize(n, nq);
  t.dx.resize(n, nq);
  t.dy.resize(n, nq);
  t.dxx.resize(n, nq);
  t.dxy.resize(n, nq);
  t.dyy.resize(n, nq);
  const auto& G = G_;
  for (int q = 0; q < nq; ++q) {
    const int c = MonomialTable::kRowsPerPoint * q;
    for (int j = 0; j < n; ++j) {
      Eigen::Vector3d d1(A(j, c + 1), A(j, c + 2), A(j, c + 3));
      Eigen::Matrix3d d2;
      d2 << A(j, c + 4), A(j, c + 5), A(j, c + 6),
            A(j, c + 5), A(j, c + 7), A(j, c + 8),
            A(j, c + 6), A(j, c + 8), A(j, c + 9);
      Vec2 g = G.transpose() * d1;
      Mat2 h = G.transpose() * d2 * G;
      t.value(j, q) = A(j, c);
      t.dx(j, q) = g.x();
      t.dy(j, q) = g.y();
      t.dxx(j, q) = h(0, 0);
      t.dxy(j, q) = h(0, 1);
      t.dyy(j, q) = h(1, 1);
    }
  }
  return t;
}

double apply_dof(const DofDescriptor& dof, const ElementGeometry& geom, const ScalarFunction& f,
                 int edge_points) {
  switch (dof.kind) {
    case DofKind::Value: return f.value(geom.point(entity_point(dof)));
    case DofKind::DerivX: return f.gradient(geom.point(entity_point(dof))).x();
    case DofKind::DerivY: return f.gradient(geom.point(entity_point(dof))).y();
    case DofKind::NormalMean:
    case DofKind::MedianMean: {
      const Vec2 dir = dof_direction(dof, geom);
      const EdgeRule& rule = edge_rule(edge_points);
      double s = 0.0;
      for (int q = 0; q < rule.size(); ++q) {
        s += rule.weights[q] * f.gradient(geom.point(edge_bary(dof.index, rule.points[q]))).dot(dir);
      }
      return s;
    }
  }
  return 0.0;
}

double apply_dof(const DofDescriptor& dof, const ElementGeometry& geom, const BaryPoly& p,
                 int edge_points) {
  const auto G = geom.grad_lambda_matrix();
  switch (dof.kind) {
    case DofKind::Value: return p.value(entity_point(dof));
    case DofKind::DerivX: return p.gradient(entity_point(dof), G).x();
    case DofKind::DerivY: return p.gradient(entity_point(dof), G).y();
    case DofKind::NormalMean:
    case DofKind::MedianMean: {
      const Vec2 dir = dof_direction(dof, geom);
      const EdgeRule& rule = edge_rule(edge_points);
      double s = 0.0;
      for (int q = 0; q < rule.size(); ++q) {
        s += rule.weights[q] * p.gradient(edge_bary(dof.index, rule.points[q]), G).dot(dir);
      }
      return s;
    }
  }
  return 0.0;
}

Eigen::MatrixXd duality_matrix(const LocalBasis& basis) {
  const int n = basis.size();
  Eigen::MatrixXd D(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) D(i, j) = apply_dof(basis.dofs()[i], basis.geometry(), basis.shape(j));
  return D;
}

Eigen::VectorXd interpolate(const LocalBasis& basis, const ScalarFunction& f, int edge_points) {
  Eigen::VectorXd c(basis.size());
  for (int i = 0; i < basis.size(); ++i) c[i] = apply_dof(basis.dofs()[i], basis.geometry(), f, edge_points);
  return c;
}

double evaluate(const LocalBasis& basis, const Eigen::VectorXd& coeffs, const Eigen::Vector3d& l) {
  double v = 0.0;
  for (int j = 0; j < basis.size(); ++j) v += coeffs[j] * basis.value(j, l);
  return v;
}

ScalarFunction as_function(const BaryPoly& p, const ElementGeometry& geom) {
  const auto G = geom.grad_lambda_matrix();
  return {[p, geom](const Vec2& x) { return p.value(geom.barycentric(x)); },
          [p, geom, G](const Vec2& x) { return Vec2(p.gradient(geom.barycentric(x), G)); }};
}

LocalBasis ntw_basis(const ElementGeometry& geom) {
  const BaryPoly b = BaryPoly::bubble();
  std::array<BaryPoly, 3> l{BaryPoly::lambda(0), BaryPoly::lambda(1), BaryPoly::lambda(2)};
  std::array<BaryPoly, 3> s;  // 2 l_i - 1
  for (int i = 0; i < 3; ++i) s[i] = 2.0 * l[i] - 1.0;

  std::vector<BaryPoly> shapes(9);
  std::vector<DofDescriptor> dofs(9);
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    const int k = (i + 2) % 3;
    const Vec2& gi = geom.grad_lambda[i];

    BaryPoly phi = l[i] * s[i] - 6.0 * b * s[i];
    for (int m : {j, k}) {
      const Vec2& gm = geom.grad_lambda[m];
      phi += (6.0 * gi.dot(gm) / gm.squaredNorm()) * (b * s[m]);
    }
    shapes[i] = phi;
    shapes[3 + i] = 4.0 * l[j] * l[k] + 12.0 * b * (1.0 - 4.0 * l[i]);
    shapes[6 + i] = (6.0 * geom.edge_sign[i] / gi.norm()) * (b * s[i]);

    dofs[i] = {DofEntity::Vertex, i, DofKind::Value, 1};
    dofs[3 + i] = {DofEntity::Midpoint, i, DofKind::Value, 1};
    dofs[6 + i] = {DofEntity::Edge, i, DofKind::NormalMean, geom.edge_sign[i]};
  }
  return LocalBasis(ElementKind::NTW, geom, std::move(shapes), std::move(dofs));
}

LocalBasis ntw_affine_basis(const ElementGeometry& geom) {
  const BaryPoly b = BaryPoly::bubble();
  std::array<BaryPoly, 3> l{BaryPoly::lambda(0), BaryPoly::lambda(1), BaryPoly::lambda(2)};

  std::vector<BaryPoly> shapes(9);
  std::vector<DofDescriptor> dofs(9);
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    const int k = (i + 2) % 3;
    shapes[i] = l[i] * (2.0 * l[i] - 1.0) + 6.0 * b * (1.0 - l[i]);
    shapes[3 + i] = 4.0 * l[j] * l[k] + 12.0 * b * (1.0 - 4.0 * l[i]);
    shapes[6 + i] = 6.0 * b * (2.0 * l[i] - 1.0);

    dofs[i] = {DofEntity::Vertex, i, DofKind::Value, 1};
    dofs[3 + i] = {DofEntity::Midpoint, i, DofKind::Value, 1};
    dofs[6 + i] = {DofEntity::Edge, i, DofKind::MedianMean, 1};
  }
  // The element family is NTW; only the third DOF set differs.
  return LocalBasis(ElementKind::NTW, geom, std::move(shapes), std::move(dofs));
}

LocalBasis specht_basis(const ElementGeometry& geom) {
  std::vector<BaryPoly> span = p2_span();
  // Zienkiewicz cubics l_i^2 l_j - l_j^2 l_i for (i, j) = (0,1), (1,2), (2,0).
  span.push_back(BaryPoly::monomial(2, 1, 0) - BaryPoly::monomial(1, 2, 0));
  span.push_back(BaryPoly::monomial(0, 2, 1) - BaryPoly::monomial(0, 1, 2));
  span.push_back(BaryPoly::monomial(1, 0, 2) - BaryPoly::monomial(2, 0, 1));
  for (int i = 0; i < 3; ++i) span.push_back(BaryPoly::bubble() * BaryPoly::lambda(i));

  std::vector<DofDescriptor> dofs;
  for (int i = 0; i < 3; ++i) {
    dofs.push_back({DofEntity::Vertex, i, DofKind::Value, 1});
    dofs.push_back({DofEntity::Vertex, i, DofKind::DerivX, 1});
    dofs.push_back({DofEntity::Vertex, i, DofKind::DerivY, 1});
  }

  std::vector<std::function<double(const BaryPoly&)>> functionals;
  std::vector<double> scale;
  for (const auto& d : dofs) {
    functionals.push_back([d, &geom](const BaryPoly& p) { return apply_dof(d, geom, p); });
    scale.push_back(d.kind == DofKind::Value ? 1.0 : geom.diameter);
  }
  const auto G = geom.grad_lambda_matrix();
  for (int e = 0; e < 3; ++e) {
    functionals.push_back([e, &geom, G](const BaryPoly& p) {
      // Mean over e of P2(xi) dp/dn, xi = 2t - 1 in [-1, 1].
      const EdgeRule& rule = edge_rule(3);
      double s = 0.0;
      for (int q = 0; q < rule.size(); ++q) {
        const double xi = 2.0 * rule.points[q] - 1.0;
        const double p2 = 0.5 * (3.0 * xi * xi - 1.0);
        s += rule.weights[q] * p2 * p.gradient(edge_bary(e, rule.points[q]), G).dot(geom.normal[e]);
      }
      return s;
    });
    scale.push_back(geom.diameter);
  }
  auto shapes = dualize(span, functionals, scale, 9, "Specht");
  return LocalBasis(ElementKind::Specht, geom, std::move(shapes), std::move(dofs));
}

LocalBasis morley_basis(const ElementGeometry& geom) {
  std::vector<DofDescriptor> dofs;
  for (int i = 0; i < 3; ++i) dofs.push_back({DofEntity::Vertex, i, DofKind::Value, 1});
  for (int i = 0; i < 3; ++i) dofs.push_back({DofEntity::Edge, i, DofKind::NormalMean, geom.edge_sign[i]});

  std::vector<std::function<double(const BaryPoly&)>> functionals;
  std::vector<double> scale;
  for (const auto& d : dofs) {
    functionals.push_back([d, &geom](const BaryPoly& p) { return apply_dof(d, geom, p); });
    scale.push_back(d.kind == DofKind::Value ? 1.0 : geom.diameter);
  }
  auto shapes = dualize(p2_span(), functionals, scale, 6, "Morley");
  return LocalBasis(ElementKind::Morley, geom, std::move(shapes), std::move(dofs));
}

LocalBasis make_basis(ElementKind kind, const ElementGeometry& geom) {
  switch (kind) {
    case ElementKind::NTW: return ntw_basis(geom);
    case ElementKind::Specht: return specht_basis(geom);
    case ElementKind::Morley: return morley_basis(geom);
  }
  throw std::invalid_argument("unknown element kind");
}

Pi1Map pi1_map(const LocalBasis& basis) {
  Pi1Map P(3, basis.size());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < basis.size(); ++j) P(i, j) = basis.value(j, vertex_bary(i));
  return P;
}

Pi1Map pi1_map(const ElementGeometry& geom) { return pi1_map(morley_basis(geom)); }

double verify_affine_identity(const ElementGeometry& geom, const ScalarFunction& v, int grid) {
  const LocalBasis ntw = ntw_basis(geom);
  const LocalBasis affine = ntw_affine_basis(geom);
  const Eigen::VectorXd c = interpolate(ntw, v);
  const Eigen::VectorXd ca = interpolate(affine, v);
  double dev = 0.0;
  for (int i = 0; i <= grid; ++i) {
    for (int j = 0; i + j <= grid; ++j) {
      Eigen::Vector3d l(double(i) / grid, double(j) / grid, double(grid - i - j) / grid);
      dev = std::max(dev, std::abs(evaluate(ntw, c, l) - evaluate(affine, ca, l)));
    }
  }
  return dev;
}

}  // namespace sgfem
