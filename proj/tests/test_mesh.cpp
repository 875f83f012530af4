#include <algorithm>
#include <cmath>
#include <sstream>

#include "doctest.h"
#include "sgfem/mesh.hpp"

using namespace sgfem;

namespace {

Mesh unit_triangle() { return Mesh({{0, 0}, {1, 0}, {0, 1}}, {{0, 1, 2}}); }

void check_invariants(const Mesh& m) {
  int interior = 0, boundary = 0;
  for (const Edge& e : m.edges()) {
    if (e.boundary) {
      ++boundary;
      CHECK(e.triangles[1] == -1);
    } else {
      ++interior;
      CHECK(e.triangles[0] >= 0);
      CHECK(e.triangles[1] >= 0);
    }
  }
  CHECK(3 * m.num_triangles() == 2 * interior + boundary);
  for (int k = 0; k < m.num_triangles(); ++k) {
    CHECK(m.signed_area(k) > 0.0);
    const ElementGeometry g = element_geometry(m, k);
    CHECK((g.grad_lambda[0] + g.grad_lambda[1] + g.grad_lambda[2]).norm() <= 1e-14 * g.grad_lambda[0].norm());
    for (int i = 0; i < 3; ++i) {
      CHECK(std::abs(g.altitude[i] * g.edge_length[i] - 2 * g.area) <= 1e-12 * g.area);
      const Edge& e = m.edge(m.triangle_edges(k)[i]);
      CHECK((m.edge_signs(k)[i] * e.normal - g.normal[i]).norm() <= 1e-14);
      // outward: points away from the opposite vertex
      CHECK(g.normal[i].dot(g.midpoint[i] - g.vertices[i]) > 0.0);
    }
  }
}

}  // namespace

TEST_CASE("make_structured counts and topology") {
  const Mesh m1 = make_structured(1);
  CHECK(m1.num_vertices() == 4);
  CHECK(m1.num_triangles() == 2);
  CHECK(m1.total_area() == doctest::Approx(1.0).epsilon(1e-14));

  const Mesh m8 = make_structured(8);
  CHECK(m8.num_triangles() == 2 * 8 * 8);
  CHECK(m8.num_vertices() == 9 * 9);
  CHECK(std::abs(m8.total_area() - 1.0) <= 1e-12);
  CHECK(m8.max_diameter() == doctest::Approx(std::sqrt(2.0) / 8));

  const Mesh m2 = make_structured(2);
  check_invariants(m2);
  check_invariants(m8);
  CHECK_THROWS_AS(make_structured(0), MeshError);
}

TEST_CASE("load_mesh") {
  SUBCASE("single triangle") {
    std::istringstream in("3 1\n0 0\n1 0\n0 1\n0 1 2\n");
    const Mesh m = load_mesh(in);
    CHECK(m.num_triangles() == 1);
    CHECK(m.total_area() == doctest::Approx(0.5));
    CHECK(m.num_edges() == 3);
    CHECK(m.num_boundary_edges() == 3);
  }
  SUBCASE("clockwise triangle is reoriented") {
    std::istringstream in("3 1\n0 0\n1 0\n0 1\n0 2 1\n");
    const Mesh m = load_mesh(in);
    CHECK(m.signed_area(0) == doctest::Approx(0.5));
  }
  SUBCASE("out-of-range index") {
    std::istringstream in("3 1\n0 0\n1 0\n0 1\n0 1 7\n");
    CHECK_THROWS_AS(load_mesh(in), MeshError);
  }
  SUBCASE("malformed counts") {
    std::istringstream in("3\n");
    CHECK_THROWS_AS(load_mesh(in), MeshError);
    std::istringstream short_in("3 1\n0 0\n1 0\n");
    CHECK_THROWS_AS(load_mesh(short_in), MeshError);
  }
  SUBCASE("zero-area triangle") {
    std::istringstream in("3 1\n0 0\n1 1\n2 2\n0 1 2\n");
    CHECK_THROWS_AS(load_mesh(in), MeshError);
  }
  SUBCASE("round trip through write_mesh") {
    const Mesh m = make_structured(3);
    std::stringstream io;
    write_mesh(io, m);
    const Mesh r = load_mesh(io);
    CHECK(r.num_vertices() == m.num_vertices());
    CHECK(r.num_triangles() == m.num_triangles());
    for (int v = 0; v < m.num_vertices(); ++v) CHECK((r.vertex(v) - m.vertex(v)).norm() == 0.0);
  }
}

TEST_CASE("refine") {
  const Mesh m = make_structured(1);
  CHECK(m.num_edges() == 5);
  const Mesh r = refine(m);
  CHECK(r.num_triangles() == 8);
  CHECK(r.num_vertices() == 9);
  CHECK(std::abs(r.total_area() - m.total_area()) <= 1e-12);
  check_invariants(r);

  // children similar to the parent with ratio 1/2
  const Mesh j = Mesh({{0, 0}, {1, 0.2}, {0.3, 0.9}}, {{0, 1, 2}});
  const Mesh jr = refine(j);
  auto sorted_lengths = [](const ElementGeometry& g) {
    std::array<double, 3> l = g.edge_length;
    std::sort(l.begin(), l.end());
    return l;
  };
  const auto parent = sorted_lengths(element_geometry(j, 0));
  for (int k = 0; k < jr.num_triangles(); ++k) {
    const auto child = sorted_lengths(element_geometry(jr, k));
    for (int i = 0; i < 3; ++i) CHECK(child[i] == doctest::Approx(parent[i] / 2).epsilon(1e-13));
  }

  // Five refinements of structured:8 reach h = 1/256 in cell size.
  Mesh deep = make_structured(8);
  for (int i = 0; i < 5; ++i) deep = refine(deep);
  CHECK(deep.num_triangles() == 2 * 64 * 1024);
  CHECK(deep.max_diameter() == doctest::Approx(std::sqrt(2.0) / 256));
  CHECK(std::abs(deep.total_area() - 1.0) <= 1e-12);
}

TEST_CASE("element geometry of the unit right triangle") {
  const ElementGeometry g = element_geometry(unit_triangle(), 0);
  CHECK(g.area == doctest::Approx(0.5));
  // edge 0 is the hypotenuse, opposite a0 = (0,0)
  CHECK(g.edge_length[0] == doctest::Approx(std::sqrt(2.0)));
  CHECK(g.altitude[0] == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(g.altitude[0] * g.edge_length[0] == doctest::Approx(2 * g.area));
  CHECK(g.grad_lambda[0].x() == doctest::Approx(-1.0));
  CHECK(g.grad_lambda[0].y() == doctest::Approx(-1.0));
  for (int i = 0; i < 3; ++i) {
    const Eigen::Vector3d l = g.barycentric(g.vertices[i]);
    for (int j = 0; j < 3; ++j) CHECK(l[j] == doctest::Approx(i == j ? 1.0 : 0.0));
  }
}

TEST_CASE("offsets") {
  const double s3 = std::sqrt(3.0);
  const ElementGeometry eq = make_geometry({0, 0}, {1, 0}, {0.5, s3 / 2});
  for (int i = 0; i < 3; ++i) CHECK(std::abs(eq.offset[i]) <= 1e-14);

  const ElementGeometry g = make_geometry({0.1, 0.0}, {1.3, 0.4}, {0.2, 0.9});
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    const double formula = std::abs(g.edge_length[j] * g.edge_length[j] - g.edge_length[k] * g.edge_length[k]) /
                           (2 * g.edge_length[i]);
    // distance between midpoint and foot of the altitude from a_i
    const Vec2 foot = g.vertices[i] + g.altitude[i] * g.normal[i];
    CHECK((foot - g.midpoint[i]).norm() == doctest::Approx(formula));
    CHECK(g.offset[i] == doctest::Approx(formula));
  }
  CHECK(g.chunkiness >= 1.0);
  CHECK_THROWS_AS(make_geometry({0, 0}, {0, 1}, {1, 0}), MeshError);
}
