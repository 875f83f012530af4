#include "sgfem/manufactured.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sgfem {

namespace {

constexpr double kPi = std::numbers::pi;

void check_order(int order) {
  if (order < 0 || order > 4) throw std::out_of_range("derivative order must be in 0..4");
}

// e^{cos wt} - e
Separable1D exp_cos_factor(double w) {
  return {[w](int k, double t) {
    check_order(k);
    const double c = std::cos(w * t), s = std::sin(w * t), E = std::exp(c);
    switch (k) {
      case 0: return E - std::numbers::e;
      case 1: return -w * s * E;
      case 2: return w * w * E * (s * s - c);
      case 3: return w * w * w * E * s * (c * c + 3.0 * c);
      default: return std::pow(w, 4) * E * (c * c * c + 3.0 * c * c - s * s * (c * c + 5.0 * c + 3.0));
    }
  }};
}

// cos wt - 1
Separable1D cos_factor(double w) {
  return {[w](int k, double t) {
    check_order(k);
    const double c = std::cos(w * t), s = std::sin(w * t);
    const double wk = std::pow(w, k);
    switch (k) {
      case 0: return c - 1.0;
      case 1: return -wk * s;
      case 2: return -wk * c;
      case 3: return wk * s;
      default: return wk * c;
    }
  }};
}

double exp_sin(int k, double t) {
  const double w = kPi;
  const double sg = std::sin(w * t), kc = std::cos(w * t), G = std::exp(sg);
  switch (k) {
    case 0: return G - 1.0;
    case 1: return w * kc * G;
    case 2: return w * w * G * (kc * kc - sg);
    case 3: return w * w * w * G * kc * (kc * kc - 3.0 * sg - 1.0);
    default:
      return std::pow(w, 4) * G *
             (std::pow(kc, 4) - 6.0 * sg * kc * kc - 4.0 * kc * kc + 3.0 * sg * sg + sg);
  }
}

double sin_pi(int k, double t) {
  const double s = std::sin(kPi * t), c = std::cos(kPi * t);
  const double wk = std::pow(kPi, k);
  switch (k) {
    case 0: return s;
    case 1: return wk * c;
    case 2: return -wk * s;
    case 3: return -wk * c;
    default: return wk * s;
  }
}

// cosh(a)/sinh(b) and sinh(a)/sinh(b) for |a| <= b, without forming
// cosh or sinh of large arguments.
struct HyperRatios {
  double r;  // cosh a / sinh b
  double q;  // sinh a / sinh b
};

HyperRatios hyper_ratios(double a, double b) {
  const double aa = std::abs(a);
  const double scale = std::exp(aa - b) / -std::expm1(-2.0 * b);
  return {scale * (1.0 + std::exp(-2.0 * aa)), std::copysign(scale * -std::expm1(-2.0 * aa), a)};
}

// L(t) = -pi iota (coth b - cosh(a)/sinh(b)), a = (2t-1)/(2 iota), b = 1/(2 iota).
double layer(int k, double t, double iota) {
  const double b = 1.0 / (2.0 * iota);
  const HyperRatios h = hyper_ratios((2.0 * t - 1.0) / (2.0 * iota), b);
  switch (k) {
    case 0: return -kPi * iota * (hyper_ratios(b, b).r - h.r);
    case 1: return kPi * h.q;
    case 2: return kPi * h.r / iota;
    case 3: return kPi * h.q / (iota * iota);
    default: return kPi * h.r / (iota * iota * iota);
  }
}

}  // namespace

Mat2 ManufacturedField::gradient(const Vec2& p) const {
  Mat2 g;
  for (int c = 0; c < 2; ++c) g.row(c) << d(c, 1, 0, p), d(c, 0, 1, p);
  return g;
}

Mat2 ManufacturedField::hessian(int c, const Vec2& p) const {
  Mat2 h;
  h << d(c, 2, 0, p), d(c, 1, 1, p), d(c, 1, 1, p), d(c, 0, 2, p);
  return h;
}

ManufacturedField example_smooth() {
  ManufacturedField f;
  f.name = "smooth";
  f.X = {exp_cos_factor(2.0 * kPi), cos_factor(2.0 * kPi)};
  f.Y = {exp_cos_factor(2.0 * kPi), cos_factor(4.0 * kPi)};
  return f;
}

ManufacturedField example_layer(double iota) {
  if (!(iota > 0.0)) throw std::invalid_argument("layer example needs iota > 0");
  Separable1D x1{[iota](int k, double t) {
    check_order(k);
    return exp_sin(k, t) + layer(k, t, iota);
  }};
  Separable1D x2{[iota](int k, double t) {
    check_order(k);
    return sin_pi(k, t) + layer(k, t, iota);
  }};
  ManufacturedField f;
  f.name = "layer";
  f.X = {x1, x2};
  f.Y = {x1, x2};
  return f;
}

ManufacturedField make_example(const std::string& name, double iota) {
  if (name == "smooth") return example_smooth();
  if (name == "layer") return example_layer(iota);
  throw std::invalid_argument("unknown example '" + name + "' (expected smooth or layer)");
}

Vec2 source_g(const ManufacturedField& u, const MaterialParams& mat, const Vec2& p) {
  const double mu = mat.mu, lm = mat.lambda + mat.mu;
  auto d = [&](int c, int ax, int ay) { return u.d(c, ax, ay, p); };
  return {mu * (d(0, 2, 0) + d(0, 0, 2)) + lm * (d(0, 2, 0) + d(1, 1, 1)),
          mu * (d(1, 2, 0) + d(1, 0, 2)) + lm * (d(0, 1, 1) + d(1, 0, 2))};
}

VectorField source(const ManufacturedField& u, const MaterialParams& mat) {
  return [u, mat](const Vec2& p) -> Vec2 {
    const double mu = mat.mu, lm = mat.lambda + mat.mu, i2 = mat.iota * mat.iota;
    auto d = [&](int c, int ax, int ay) { return u.d(c, ax, ay, p); };
    const Vec2 lap_g{
        mu * (d(0, 4, 0) + 2.0 * d(0, 2, 2) + d(0, 0, 4)) +
            lm * (d(0, 4, 0) + d(0, 2, 2) + d(1, 3, 1) + d(1, 1, 3)),
        mu * (d(1, 4, 0) + 2.0 * d(1, 2, 2) + d(1, 0, 4)) +
            lm * (d(0, 3, 1) + d(0, 1, 3) + d(1, 2, 2) + d(1, 0, 4))};
    return i2 * lap_g - source_g(u, mat, p);
  };
}

}  // namespace sgfem
