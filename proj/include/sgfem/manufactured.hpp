#pragma once

#include <array>
#include <functional>
#include <string>

#include "sgfem/assembly.hpp"
#include "sgfem/mesh.hpp"

namespace sgfem {

/// A univariate factor with its derivatives of order 0..4.
struct Separable1D {
  std::function<double(int order, double t)> eval;

  double operator()(int order, double t) const { return eval(order, t); }
};

/// u_c(x, y) = X[c](x) * Y[c](y) for c = 0, 1.
struct ManufacturedField {
  std::string name;
  std::array<Separable1D, 2> X;
  std::array<Separable1D, 2> Y;

  /// d^(ax + ay) u_c / dx^ax dy^ay at p, for ax, ay <= 4.
  double d(int c, int ax, int ay, const Vec2& p) const { return X[c](ax, p.x()) * Y[c](ay, p.y()); }
  Vec2 value(const Vec2& p) const { return {d(0, 0, 0, p), d(1, 0, 0, p)}; }
  /// Row c is grad u_c.
  Mat2 gradient(const Vec2& p) const;
  Mat2 hessian(int c, const Vec2& p) const;
};

/// Smooth example on the unit square:
///   u_1 = (e^{cos 2 pi x} - e)(e^{cos 2 pi y} - e),
///   u_2 = (cos 2 pi x - 1)(cos 4 pi y - 1).
ManufacturedField example_smooth();

/// Boundary-layer example with parameter iota in (0, 1]:
///   u_1 = X(x) X(y),  X(t) = e^{sin pi t} - 1 + L(t),
///   u_2 = Z(x) Z(y),  Z(t) = sin pi t + L(t),
///   L(t) = -pi iota (cosh(1/(2 iota)) - cosh((2t - 1)/(2 iota))) / sinh(1/(2 iota)).
/// Hyperbolic ratios are evaluated in a form that cannot overflow.
ManufacturedField example_layer(double iota);

/// Selects "smooth" or "layer"; the layer field uses mat.iota.
ManufacturedField make_example(const std::string& name, double iota);

/// f = iota^2 Lap g - g with g = mu Lap u + (lambda + mu) grad div u.
VectorField source(const ManufacturedField& field, const MaterialParams& mat);

/// g itself, exposed for testing.
Vec2 source_g(const ManufacturedField& field, const MaterialParams& mat, const Vec2& p);

}  // namespace sgfem
