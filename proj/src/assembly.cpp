#include "sgfem/assembly.hpp"

#include <cmath>
#include <sstream>

#include "sgfem/quadrature.hpp"

namespace sgfem {

void MaterialParams::validate() const {
  std::ostringstream msg;
  if (!(mu > 0.0)) msg << "mu must be positive (got " << mu << ")";
  else if (!(lambda >= 0.0)) msg << "lambda must be non-negative (got " << lambda << ")";
  else if (!(iota > 0.0 && iota <= 1.0)) msg << "iota must lie in (0, 1] (got " << iota << ")";
  else return;
  throw std::invalid_argument(msg.str());
}

DofMap::DofMap(const Mesh& mesh, ElementKind kind) : kind_(kind), local_size_(sgfem::local_size(kind)) {
  const int V = mesh.num_vertices();
  const int E = mesh.num_edges();
  const int T = mesh.num_triangles();
  if (T == 0) throw std::invalid_argument("cannot number DOFs on an empty mesh");

  switch (kind) {
    case ElementKind::NTW: scalar_size_ = V + 2 * E; break;
    case ElementKind::Specht: scalar_size_ = 3 * V; break;
    case ElementKind::Morley: scalar_size_ = V + E; break;
  }

  boundary_.assign(scalar_size_, false);
  for (int v = 0; v < V; ++v) {
    if (!mesh.is_boundary_vertex(v)) continue;
    if (kind == ElementKind::Specht) {
      for (int r = 0; r < 3; ++r) boundary_[3 * v + r] = true;
    } else {
      boundary_[v] = true;
    }
  }
  if (kind != ElementKind::Specht) {
    for (int e = 0; e < E; ++e) {
      if (!mesh.edge(e).boundary) continue;
      boundary_[V + e] = true;
      if (kind == ElementKind::NTW) boundary_[V + E + e] = true;
    }
  }

  element_dofs_.resize(T);
  for (int k = 0; k < T; ++k) {
    const auto& tri = mesh.triangle(k);
    const auto& te = mesh.triangle_edges(k);
    auto& d = element_dofs_[k];
    d.reserve(local_size_);
    switch (kind) {
      case ElementKind::NTW:
        for (int i = 0; i < 3; ++i) d.push_back(tri[i]);
        for (int i = 0; i < 3; ++i) d.push_back(V + te[i]);
        for (int i = 0; i < 3; ++i) d.push_back(V + E + te[i]);
        break;
      case ElementKind::Specht:
        for (int i = 0; i < 3; ++i)
          for (int r = 0; r < 3; ++r) d.push_back(3 * tri[i] + r);
        break;
      case ElementKind::Morley:
        for (int i = 0; i < 3; ++i) d.push_back(tri[i]);
        for (int i = 0; i < 3; ++i) d.push_back(V + te[i]);
        break;
    }
  }
}

std::vector<int> DofMap::element_vector_dofs(int k) const {
  const auto& d = element_dofs_[k];
  std::vector<int> out(2 * d.size());
  for (std::size_t j = 0; j < d.size(); ++j) {
    out[j] = d[j];
    out[d.size() + j] = scalar_size_ + d[j];
  }
  return out;
}

int DofMap::num_boundary() const {
  int n = 0;
  for (bool b : boundary_) n += b;
  return n;
}

Discretization::Discretization(const Mesh& mesh, ElementKind kind) : mesh_(&mesh), dofmap_(mesh, kind) {
  bases_.reserve(mesh.num_triangles());
  for (int k = 0; k < mesh.num_triangles(); ++k) {
    try {
      bases_.push_back(make_basis(kind, element_geometry(mesh, k)));
    } catch (const ElementError& err) {
      throw ElementError("element " + std::to_string(k) + ": " + err.what());
    }
    if (kind == ElementKind::Morley) pi1_.push_back(pi1_map(bases_.back()));
  }
}

const MonomialTable& volume_table() {
  static const MonomialTable table(volume_rule().points);
  return table;
}

namespace {

// Strain rows (e11, e22, sqrt2 e12) and strain-gradient rows built from
// scalar gradient tables (gx, gy) and Hessian tables, for the 2n-vector
// layout c * n + j.
Eigen::MatrixXd local_form(const Eigen::MatrixXd& gx, const Eigen::MatrixXd& gy,
                           const Eigen::MatrixXd& hxx, const Eigen::MatrixXd& hxy,
                           const Eigen::MatrixXd& hyy, double area, const MaterialParams& mat) {
  const int n = static_cast<int>(gx.rows());
  const int nq = static_cast<int>(gx.cols());
  const auto& w = volume_rule().weights;
  const double r2 = std::sqrt(0.5);
  const double i2 = mat.iota * mat.iota;

  Eigen::MatrixXd K = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  Eigen::RowVectorXd div(2 * n);
  Eigen::MatrixXd eps(3, 2 * n), gdiv(2, 2 * n), geps(6, 2 * n);
  for (int q = 0; q < nq; ++q) {
    const auto ux = gx.col(q).transpose();
    const auto uy = gy.col(q).transpose();
    const auto uxx = hxx.col(q).transpose();
    const auto uxy = hxy.col(q).transpose();
    const auto uyy = hyy.col(q).transpose();
    const auto z = Eigen::RowVectorXd::Zero(n);

    div << ux, uy;
    eps.row(0) << ux, z;
    eps.row(1) << z, uy;
    eps.row(2) << r2 * uy, r2 * ux;

    gdiv.row(0) << uxx, uxy;
    gdiv.row(1) << uxy, uyy;
    geps.row(0) << uxx, z;             // d_x e11
    geps.row(1) << uxy, z;             // d_y e11
    geps.row(2) << z, uxy;             // d_x e22
    geps.row(3) << z, uyy;             // d_y e22
    geps.row(4) << r2 * uxy, r2 * uxx; // sqrt2 d_x e12
    geps.row(5) << r2 * uyy, r2 * uxy; // sqrt2 d_y e12

    const double wq = w[q] * area;
    K.noalias() += wq * (mat.lambda * div.transpose() * div + 2.0 * mat.mu * eps.transpose() * eps);
    K.noalias() += (wq * i2) * (mat.lambda * gdiv.transpose() * gdiv +
                                2.0 * mat.mu * geps.transpose() * geps);
  }
  return 0.5 * (K + K.transpose());
}

}  // namespace

Eigen::MatrixXd element_stiffness(const LocalBasis& basis, const MaterialParams& mat) {
  const ShapeTable t = basis.tabulate(volume_table());
  return local_form(t.dx, t.dy, t.dxx, t.dxy, t.dyy, basis.geometry().area, mat);
}

Eigen::MatrixXd element_stiffness_morley(const LocalBasis& basis, const Pi1Map& pi1,
                                         const MaterialParams& mat) {
  const ShapeTable t = basis.tabulate(volume_table());
  const int nq = static_cast<int>(t.dx.cols());
  // grad pi_1 phi_j = sum_i P(i, j) grad l_i, constant on the element.
  const Eigen::MatrixXd gp = pi1.transpose() * basis.geometry().grad_lambda_matrix();
  const Eigen::MatrixXd gx = gp.col(0).replicate(1, nq);
  const Eigen::MatrixXd gy = gp.col(1).replicate(1, nq);
  return local_form(gx, gy, t.dxx, t.dxy, t.dyy, basis.geometry().area, mat);
}

Eigen::VectorXd element_load(const LocalBasis& basis, const VectorField& f, const Pi1Map* pi1) {
  const TriangleRule& rule = volume_rule();
  const ElementGeometry& g = basis.geometry();
  const int n = basis.size();
  Eigen::MatrixXd values;
  if (pi1) {
    Eigen::MatrixXd L(3, rule.size());
    for (int q = 0; q < rule.size(); ++q)
      L.col(q) << rule.points[q][0], rule.points[q][1], rule.points[q][2];
    values = pi1->transpose() * L;
  } else {
    values = basis.tabulate(volume_table()).value;
  }
  Eigen::VectorXd F = Eigen::VectorXd::Zero(2 * n);
  for (int q = 0; q < rule.size(); ++q) {
    const auto& p = rule.points[q];
    const Vec2 fx = f(g.point(Eigen::Vector3d(p[0], p[1], p[2])));
    const double wq = rule.weights[q] * g.area;
    F.head(n) += (wq * fx.x()) * values.col(q);
    F.tail(n) += (wq * fx.y()) * values.col(q);
  }
  return F;
}

SparseSystem assemble(const Discretization& disc, const MaterialParams& mat, const VectorField& f) {
  mat.validate();
  const DofMap& dm = disc.dofmap();
  const int N = dm.size();
  const int Ns = dm.scalar_size();

  SparseSystem sys;
  sys.full_size = N;
  std::vector<int> reduced(N, -1);
  for (int i = 0; i < N; ++i) {
    if (!dm.is_boundary(i % Ns)) {
      reduced[i] = static_cast<int>(sys.retained.size());
      sys.retained.push_back(i);
    }
  }
  const int n = static_cast<int>(sys.retained.size());
  sys.rhs = Eigen::VectorXd::Zero(n);

  const bool morley = disc.kind() == ElementKind::Morley;
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(static_cast<std::size_t>(disc.mesh().num_triangles()) * 4 * dm.local_size() *
                   dm.local_size());
  for (int k = 0; k < disc.mesh().num_triangles(); ++k) {
    const LocalBasis& b = disc.basis(k);
    const Eigen::MatrixXd K =
        morley ? element_stiffness_morley(b, disc.pi1(k), mat) : element_stiffness(b, mat);
    const Eigen::VectorXd F = element_load(b, f, morley ? &disc.pi1(k) : nullptr);
    const std::vector<int> dofs = dm.element_vector_dofs(k);
    if (static_cast<int>(dofs.size()) != K.rows())
      throw std::logic_error("DOF map and element basis sizes disagree");
    for (std::size_t r = 0; r < dofs.size(); ++r) {
      const int gr = reduced[dofs[r]];
      if (gr < 0) continue;
      sys.rhs[gr] += F[r];
      for (std::size_t c = 0; c < dofs.size(); ++c) {
        const int gc = reduced[dofs[c]];
        if (gc >= 0) triplets.emplace_back(gr, gc, K(r, c));
      }
    }
  }
  sys.matrix.resize(n, n);
  sys.matrix.setFromTriplets(triplets.begin(), triplets.end());
  sys.matrix.makeCompressed();
  return sys;
}

Eigen::VectorXd expand(const SparseSystem& sys, const Eigen::VectorXd& reduced) {
  if (reduced.size() != static_cast<Eigen::Index>(sys.retained.size()))
    throw std::invalid_argument("reduced vector has the wrong size");
  Eigen::VectorXd full = Eigen::VectorXd::Zero(sys.full_size);
  for (std::size_t i = 0; i < sys.retained.size(); ++i) full[sys.retained[i]] = reduced[i];
  return full;
}

}  // namespace sgfem
