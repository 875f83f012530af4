#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "sgfem/elements.hpp"
#include "sgfem/mesh.hpp"

namespace sgfem {

struct MaterialParams {
  double lambda = 10.0;
  double mu = 1.0;
  double iota = 1.0;

  /// Throws std::invalid_argument unless mu > 0, lambda >= 0, 0 < iota <= 1.
  void validate() const;
};

using VectorField = std::function<Vec2(const Vec2&)>;

/// Global numbering of the scalar DOFs of one element family. The vector
/// unknown for component c and scalar DOF s has index c * scalar_size() + s.
///
/// Edge-moment DOFs are taken along the global edge normal. The element
/// bases already absorb the per-element sign, so the scatter needs none.
class DofMap {
 public:
  DofMap(const Mesh& mesh, ElementKind kind);

  ElementKind kind() const { return kind_; }
  int local_size() const { return local_size_; }
  int scalar_size() const { return scalar_size_; }
  int size() const { return 2 * scalar_size_; }

  /// Scalar global indices of element k, in the local basis order.
  const std::vector<int>& element_dofs(int k) const { return element_dofs_[k]; }
  /// Vector global indices, local layout c * local_size() + j.
  std::vector<int> element_vector_dofs(int k) const;

  bool is_boundary(int scalar_dof) const { return boundary_[scalar_dof]; }
  int num_boundary() const;

 private:
  ElementKind kind_;
  int local_size_ = 0;
  int scalar_size_ = 0;
  std::vector<std::vector<int>> element_dofs_;
  std::vector<bool> boundary_;
};

/// A mesh with one element family: DOF map and cached local bases.
class Discretization {
 public:
  Discretization(const Mesh& mesh, ElementKind kind);
  Discretization(Mesh&&, ElementKind) = delete;

  const Mesh& mesh() const { return *mesh_; }
  ElementKind kind() const { return dofmap_.kind(); }
  const DofMap& dofmap() const { return dofmap_; }
  const LocalBasis& basis(int k) const { return bases_[k]; }
  /// Only populated for Morley.
  const Pi1Map& pi1(int k) const { return pi1_[k]; }

 private:
  const Mesh* mesh_;
  DofMap dofmap_;
  std::vector<LocalBasis> bases_;
  std::vector<Pi1Map> pi1_;
};

/// Monomial table of the volume rule, shared by all elements.
const MonomialTable& volume_table();

/// Local stiffness of the full form, size 2n x 2n with n = basis.size():
/// lambda (div u, div v) + 2 mu (eps u, eps v)
///   + iota^2 [lambda (grad div u, grad div v) + 2 mu (grad eps u, grad eps v)].
Eigen::MatrixXd element_stiffness(const LocalBasis& basis, const MaterialParams& mat);

/// Morley variant: the first two terms act on pi_1 u, pi_1 v.
Eigen::MatrixXd element_stiffness_morley(const LocalBasis& basis, const Pi1Map& pi1,
                                         const MaterialParams& mat);

/// Integral of f . v over the element; with `pi1`, of f . pi_1 v.
Eigen::VectorXd element_load(const LocalBasis& basis, const VectorField& f,
                             const Pi1Map* pi1 = nullptr);

/// Clamped system after deleting boundary rows and columns.
struct SparseSystem {
  Eigen::SparseMatrix<double> matrix;
  Eigen::VectorXd rhs;
  /// retained[i] is the full-space index of reduced unknown i.
  std::vector<int> retained;
  int full_size = 0;
};

SparseSystem assemble(const Discretization& disc, const MaterialParams& mat, const VectorField& f);

/// Full-space vector with zeros at eliminated DOFs.
Eigen::VectorXd expand(const SparseSystem& sys, const Eigen::VectorXd& reduced);

}  // namespace sgfem
