#include "sgfem/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace sgfem {

namespace {

double cross(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

double signed_area_of(const Vec2& a, const Vec2& b, const Vec2& c) {
  return 0.5 * cross(b - a, c - a);
}

}  // namespace

Mesh::Mesh(std::vector<Vec2> vertices, std::vector<std::array<int, 3>> triangles)
    : vertices_(std::move(vertices)), triangles_(std::move(triangles)) {
  if (vertices_.empty() || triangles_.empty()) {
    throw MeshError("mesh must contain at least one vertex and one triangle");
  }
  const int nv = num_vertices();
  for (int k = 0; k < num_triangles(); ++k) {
    auto& t = triangles_[k];
    for (int v : t) {
      if (v < 0 || v >= nv) {
        std::ostringstream msg;
        msg << "triangle " << k << " references vertex " << v << " but the mesh has " << nv
            << " vertices";
        throw MeshError(msg.str());
      }
    }
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
      throw MeshError("triangle " + std::to_string(k) + " repeats a vertex");
    }
    double a = signed_area_of(vertices_[t[0]], vertices_[t[1]], vertices_[t[2]]);
    if (a < 0.0) {
      std::swap(t[1], t[2]);
      a = -a;
    }
    // Relative to the squared longest edge so the test is scale-free.
    double l2 = std::max({(vertices_[t[1]] - vertices_[t[0]]).squaredNorm(),
                          (vertices_[t[2]] - vertices_[t[1]]).squaredNorm(),
                          (vertices_[t[0]] - vertices_[t[2]]).squaredNorm()});
    if (!(a > 1e-14 * l2)) {
      throw MeshError("triangle " + std::to_string(k) + " has zero area");
    }
  }
  build_edges();
}

void Mesh::build_edges() {
  std::map<std::pair<int, int>, int> lookup;
  triangle_edges_.assign(triangles_.size(), {-1, -1, -1});
  edge_signs_.assign(triangles_.size(), {1, 1, 1});
  for (int k = 0; k < num_triangles(); ++k) {
    const auto& t = triangles_[k];
    for (int i = 0; i < 3; ++i) {
      int a = t[(i + 1) % 3];
      int b = t[(i + 2) % 3];
      auto key = std::minmax(a, b);
      auto [it, inserted] = lookup.try_emplace({key.first, key.second}, num_edges());
      if (inserted) {
        Edge e;
        e.vertices = {key.first, key.second};
        e.triangles = {k, -1};
        Vec2 d = (vertices_[key.second] - vertices_[key.first]).normalized();
        e.normal = Vec2(-d.y(), d.x());
        edges_.push_back(e);
      } else {
        Edge& e = edges_[it->second];
        if (e.triangles[1] != -1) {
          throw MeshError("edge (" + std::to_string(key.first) + "," + std::to_string(key.second) +
                          ") is shared by more than two triangles");
        }
        e.triangles[1] = k;
      }
      triangle_edges_[k][i] = it->second;
      // Outward normal of the counter-clockwise edge a -> b is its clockwise rotation.
      Vec2 d = vertices_[b] - vertices_[a];
      Vec2 outward(d.y(), -d.x());
      edge_signs_[k][i] = edges_[it->second].normal.dot(outward) > 0.0 ? 1 : -1;
    }
  }
  boundary_vertex_.assign(vertices_.size(), false);
  for (auto& e : edges_) {
    e.boundary = e.triangles[1] == -1;
    if (e.boundary) {
      boundary_vertex_[e.vertices[0]] = true;
      boundary_vertex_[e.vertices[1]] = true;
    }
  }
}

int Mesh::num_boundary_edges() const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(),
                                        [](const Edge& e) { return e.boundary; }));
}

int Mesh::num_boundary_vertices() const {
  return static_cast<int>(std::count(boundary_vertex_.begin(), boundary_vertex_.end(), true));
}

double Mesh::signed_area(int k) const {
  const auto& t = triangles_[k];
  return signed_area_of(vertices_[t[0]], vertices_[t[1]], vertices_[t[2]]);
}

double Mesh::total_area() const {
  double sum = 0.0;
  for (int k = 0; k < num_triangles(); ++k) sum += signed_area(k);
  return sum;
}

double Mesh::max_diameter() const {
  double h = 0.0;
  for (const auto& t : triangles_) {
    for (int i = 0; i < 3; ++i) {
      h = std::max(h, (vertices_[t[i]] - vertices_[t[(i + 1) % 3]]).norm());
    }
  }
  return h;
}

Mesh make_structured(int n) {
  if (n < 1) throw MeshError("structured mesh needs n >= 1, got " + std::to_string(n));
  std::vector<Vec2> vertices;
  vertices.reserve((n + 1) * (n + 1));
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= n; ++i) {
      vertices.emplace_back(static_cast<double>(i) / n, static_cast<double>(j) / n);
    }
  }
  auto id = [n](int i, int j) { return j * (n + 1) + i; };
  std::vector<std::array<int, 3>> triangles;
  triangles.reserve(2 * n * n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      triangles.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      triangles.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  }
  return Mesh(std::move(vertices), std::move(triangles));
}

Mesh load_mesh(std::istream& in) {
  long long nv = -1, nt = -1;
  if (!(in >> nv >> nt)) throw MeshError("mesh header: expected 'V T'");
  if (nv <= 0 || nt <= 0) {
    throw MeshError("mesh header: counts must be positive, got V=" + std::to_string(nv) +
                    " T=" + std::to_string(nt));
  }
  std::vector<Vec2> vertices(nv);
  for (long long v = 0; v < nv; ++v) {
    double x, y;
    if (!(in >> x >> y)) throw MeshError("mesh: missing coordinates for vertex " + std::to_string(v));
    if (!std::isfinite(x) || !std::isfinite(y)) {
      throw MeshError("mesh: non-finite coordinates for vertex " + std::to_string(v));
    }
    vertices[v] = Vec2(x, y);
  }
  std::vector<std::array<int, 3>> triangles(nt);
  for (long long k = 0; k < nt; ++k) {
    long long a, b, c;
    if (!(in >> a >> b >> c)) throw MeshError("mesh: missing indices for triangle " + std::to_string(k));
    for (long long v : {a, b, c}) {
      if (v < 0 || v >= nv) {
        throw MeshError("mesh: triangle " + std::to_string(k) + " references vertex " +
                        std::to_string(v) + " of " + std::to_string(nv));
      }
    }
    triangles[k] = {static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)};
  }
  std::string extra;
  if (in >> extra) throw MeshError("mesh: trailing data after " + std::to_string(nt) + " triangles");
  return Mesh(std::move(vertices), std::move(triangles));
}

Mesh load_mesh_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MeshError("cannot open mesh file '" + path + "'");
  return load_mesh(in);
}

void write_mesh(std::ostream& out, const Mesh& mesh) {
  out << mesh.num_vertices() << ' ' << mesh.num_triangles() << '\n';
  out.precision(17);
  for (const auto& p : mesh.vertices()) out << p.x() << ' ' << p.y() << '\n';
  for (const auto& t : mesh.triangles()) out << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

Mesh refine(const Mesh& mesh) {
  const int nv = mesh.num_vertices();
  std::vector<Vec2> vertices = mesh.vertices();
  vertices.reserve(nv + mesh.num_edges());
  for (const auto& e : mesh.edges()) {
    vertices.push_back(0.5 * (mesh.vertex(e.vertices[0]) + mesh.vertex(e.vertices[1])));
  }
  std::vector<std::array<int, 3>> triangles;
  triangles.reserve(4 * mesh.num_triangles());
  for (int k = 0; k < mesh.num_triangles(); ++k) {
    const auto& t = mesh.triangle(k);
    const auto& te = mesh.triangle_edges(k);
    // m[i] is the midpoint of the edge opposite vertex i.
    std::array<int, 3> m{nv + te[0], nv + te[1], nv + te[2]};
    triangles.push_back({t[0], m[2], m[1]});
    triangles.push_back({m[2], t[1], m[0]});
    triangles.push_back({m[1], m[0], t[2]});
    triangles.push_back({m[0], m[1], m[2]});
  }
  return Mesh(std::move(vertices), std::move(triangles));
}

Eigen::Vector3d ElementGeometry::barycentric(const Vec2& x) const {
  Eigen::Vector3d l;
  for (int i = 0; i < 3; ++i) {
    const Vec2& aj = vertices[(i + 1) % 3];
    l[i] = grad_lambda[i].dot(x - aj);
  }
  return l;
}

Eigen::Matrix<double, 3, 2> ElementGeometry::grad_lambda_matrix() const {
  Eigen::Matrix<double, 3, 2> g;
  for (int i = 0; i < 3; ++i) g.row(i) = grad_lambda[i].transpose();
  return g;
}

ElementGeometry make_geometry(const Vec2& a0, const Vec2& a1, const Vec2& a2) {
  ElementGeometry g;
  g.vertices = {a0, a1, a2};
  g.area = signed_area_of(a0, a1, a2);
  if (!(g.area > 0.0)) throw MeshError("element geometry needs a counter-clockwise triangle");
  for (int i = 0; i < 3; ++i) {
    const Vec2& aj = g.vertices[(i + 1) % 3];
    const Vec2& ak = g.vertices[(i + 2) % 3];
    Vec2 d = ak - aj;
    g.edge_length[i] = d.norm();
    g.tangent[i] = d / g.edge_length[i];
    g.normal[i] = Vec2(g.tangent[i].y(), -g.tangent[i].x());
    g.midpoint[i] = 0.5 * (aj + ak);
    g.altitude[i] = 2.0 * g.area / g.edge_length[i];
    // grad lambda_i points from e_i toward a_i with length 1/h_i.
    g.grad_lambda[i] = -g.normal[i] / g.altitude[i];
  }
  for (int i = 0; i < 3; ++i) {
    double lj = g.edge_length[(i + 1) % 3];
    double lk = g.edge_length[(i + 2) % 3];
    g.offset[i] = std::abs(lj * lj - lk * lk) / (2.0 * g.edge_length[i]);
  }
  g.diameter = std::max({g.edge_length[0], g.edge_length[1], g.edge_length[2]});
  double perimeter = g.edge_length[0] + g.edge_length[1] + g.edge_length[2];
  g.inradius = 2.0 * g.area / perimeter;
  g.chunkiness = g.diameter / (2.0 * g.inradius);
  return g;
}

ElementGeometry element_geometry(const Mesh& mesh, int k) {
  const auto& t = mesh.triangle(k);
  ElementGeometry g = make_geometry(mesh.vertex(t[0]), mesh.vertex(t[1]), mesh.vertex(t[2]));
  g.edge_sign = mesh.edge_signs(k);
  return g;
}

}  // namespace sgfem
