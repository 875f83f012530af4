#pragma once

#include <array>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace sgfem {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

/// Thrown for malformed mesh input or geometrically invalid triangulations.
class MeshError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An edge of the triangulation. `vertices` is stored with the lower index
/// first; `normal` is the 90 degree counter-clockwise rotation of the unit
/// vector vertices[0] -> vertices[1].
struct Edge {
  std::array<int, 2> vertices{};
  std::array<int, 2> triangles{-1, -1};
  bool boundary = false;
  Vec2 normal = Vec2::Zero();
};

/// Conforming triangulation with derived edge topology.
///
/// Local edge i of a triangle is the edge opposite its local vertex i.
/// `edge_signs(k)[i]` is +1 when the global edge normal points out of
/// triangle k and -1 otherwise. Immutable after construction.
class Mesh {
 public:
  Mesh() = default;

  /// Validates input, reorients clockwise triangles and derives edges.
  /// Throws MeshError on out-of-range indices, degenerate triangles or
  /// non-manifold edges.
  Mesh(std::vector<Vec2> vertices, std::vector<std::array<int, 3>> triangles);

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_triangles() const { return static_cast<int>(triangles_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const Vec2& vertex(int v) const { return vertices_[v]; }
  const std::vector<Vec2>& vertices() const { return vertices_; }
  const std::array<int, 3>& triangle(int k) const { return triangles_[k]; }
  const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }
  const Edge& edge(int e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }

  const std::array<int, 3>& triangle_edges(int k) const { return triangle_edges_[k]; }
  const std::array<int, 3>& edge_signs(int k) const { return edge_signs_[k]; }

  bool is_boundary_vertex(int v) const { return boundary_vertex_[v]; }
  int num_boundary_edges() const;
  int num_boundary_vertices() const;

  double signed_area(int k) const;
  double total_area() const;
  /// Largest triangle diameter.
  double max_diameter() const;

 private:
  void build_edges();

  std::vector<Vec2> vertices_;
  std::vector<std::array<int, 3>> triangles_;
  std::vector<Edge> edges_;
  std::vector<std::array<int, 3>> triangle_edges_;
  std::vector<std::array<int, 3>> edge_signs_;
  std::vector<bool> boundary_vertex_;
};

/// Uniform triangulation of the unit square: n x n cells, each split along
/// the diagonal from (x_i, y_j) to (x_{i+1}, y_{j+1}).
Mesh make_structured(int n);

/// Reads the plain-text format
///   V T
///   x y        (V lines)
///   i j k      (T lines, 0-based)
Mesh load_mesh(std::istream& in);
Mesh load_mesh_file(const std::string& path);
void write_mesh(std::ostream& out, const Mesh& mesh);

/// Red refinement: every triangle is split into four congruent children
/// through its edge midpoints. New vertex of edge e gets index V + e.
Mesh refine(const Mesh& mesh);

/// Per-triangle constants used by every shape-function formula.
///
/// Index conventions: vertex a_i, edge e_i opposite a_i running from
/// a_{i+1} to a_{i+2} (indices mod 3), b_i the midpoint of e_i.
struct ElementGeometry {
  std::array<Vec2, 3> vertices;
  double area = 0.0;
  std::array<Vec2, 3> grad_lambda;
  std::array<double, 3> edge_length{};
  std::array<double, 3> altitude{};
  /// Distance between the edge midpoint and the foot of the altitude.
  std::array<double, 3> offset{};
  std::array<Vec2, 3> normal;   // outward unit normal of e_i
  std::array<Vec2, 3> tangent;  // unit tangent a_{i+1} -> a_{i+2}
  std::array<Vec2, 3> midpoint;
  /// +1 if the global edge normal equals `normal[i]`, -1 otherwise.
  std::array<int, 3> edge_sign{1, 1, 1};
  double diameter = 0.0;
  double inradius = 0.0;
  double chunkiness = 0.0;  // diameter / inscribed-circle diameter

  Vec2 point(const Eigen::Vector3d& bary) const {
    return bary[0] * vertices[0] + bary[1] * vertices[1] + bary[2] * vertices[2];
  }
  Eigen::Vector3d barycentric(const Vec2& x) const;
  /// 3x2 matrix whose rows are grad lambda_i.
  Eigen::Matrix<double, 3, 2> grad_lambda_matrix() const;
};

/// Geometry of a standalone counter-clockwise triangle (edge signs +1).
ElementGeometry make_geometry(const Vec2& a0, const Vec2& a1, const Vec2& a2);
ElementGeometry element_geometry(const Mesh& mesh, int k);

}  // namespace sgfem
