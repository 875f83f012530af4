#include "sgfem/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace sgfem {

namespace {

// Orbit weights below are the total weight of the orbit.
void add_centroid(TriangleRule& rule, double w) {
  rule.points.push_back({1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0});
  rule.weights.push_back(w);
}

void add_orbit3(TriangleRule& rule, double a, double w) {
  const double c = 1.0 - 2.0 * a;
  for (const auto& p : {std::array{a, a, c}, std::array{a, c, a}, std::array{c, a, a}}) {
    rule.points.push_back(p);
    rule.weights.push_back(w / 3.0);
  }
}

void add_orbit6(TriangleRule& rule, double a, double b, double w) {
  const double c = 1.0 - a - b;
  for (const auto& p : {std::array{a, b, c}, std::array{a, c, b}, std::array{b, a, c},
                        std::array{b, c, a}, std::array{c, a, b}, std::array{c, b, a}}) {
    rule.points.push_back(p);
    rule.weights.push_back(w / 6.0);
  }
}

// Dunavant's positive interior rules, re-solved to full double precision
// against the exact monomial moments. Degrees 3 and 7 are served by the
// next rule up because Dunavant's rules of those degrees carry a negative
// centroid weight.
TriangleRule build_triangle_rule(int degree) {
  TriangleRule rule;
  rule.degree = degree;
  switch (degree) {
    case 1:
      add_centroid(rule, 1.0);
      break;
    case 2:
      add_orbit3(rule, 1.0 / 6.0, 1.0);
      break;
    case 4:
      add_orbit3(rule, 0.445948490915964886318, 0.670144769034034397085);
      add_orbit3(rule, 0.0915762135097707434596, 0.329855230965965602915);
      break;
    case 5:
      add_centroid(rule, 0.225);
      add_orbit3(rule, 0.47014206410511508977, 0.397182458365518542213);
      add_orbit3(rule, 0.101286507323456338801, 0.377817541634481457787);
      break;
    case 6:
      add_orbit3(rule, 0.249286745170910421292, 0.350358827179138098076);
      add_orbit3(rule, 0.0630890144915022283403, 0.152534719110620450763);
      add_orbit6(rule, 0.310352451033784405417, 0.63650249912139864723, 0.497106453710241451161);
      break;
    case 8:
      add_centroid(rule, 0.144315607677787168251);
      add_orbit3(rule, 0.170569307751760206622, 0.309652111604154750845);
      add_orbit3(rule, 0.0505472283170309754584, 0.0973754928695942409328);
      add_orbit3(rule, 0.459292588292723156029, 0.285274902801853874382);
      add_orbit6(rule, 0.263112829634638113422, 0.728492392955404281241, 0.163381885046609965589);
      break;
    case 9:
      add_centroid(rule, 0.0971357962827988338192);
      add_orbit3(rule, 0.489682519198737627784, 0.0940041006814172116106);
      add_orbit3(rule, 0.43708959149293663727, 0.23348262301432283795);
      add_orbit3(rule, 0.188203535619032730241, 0.238943216781630759099);
      add_orbit3(rule, 0.0447295133944527098651, 0.076733026976094093785);
      add_orbit6(rule, 0.221962989160765695675, 0.74119859878449802069, 0.259701236263736263736);
      break;
    case 10:
      add_centroid(rule, 0.0908179903827535800953);
      add_orbit3(rule, 0.485577633383657377368, 0.110177873269400114151);
      add_orbit3(rule, 0.109481575485037054795, 0.135963178306583804348);
      add_orbit6(rule, 0.141707219414879954757, 0.307939838764120950165, 0.436547501072520651626);
      add_orbit6(rule, 0.025003534762686386074, 0.246672560639902693917, 0.16996345518634490902);
      add_orbit6(rule, 0.00954081540029945758015, 0.0668032510122002657735,
                 0.0565300017823969407596);
      break;
    default:
      throw std::logic_error("no stored triangle rule of degree " + std::to_string(degree));
  }
  return rule;
}

EdgeRule build_edge_rule(int n) {
  EdgeRule rule;
  rule.degree = 2 * n - 1;
  rule.points.resize(n);
  rule.weights.resize(n);
  // Newton iteration on P_n with Chebyshev starting guesses, mapped to [0,1].
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    rule.points[n - 1 - i] = 0.5 * (x + 1.0);
    rule.weights[n - 1 - i] = 1.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

}  // namespace

const TriangleRule& triangle_rule(int min_degree) {
  static const std::array<TriangleRule, 8> rules{
      build_triangle_rule(1), build_triangle_rule(2), build_triangle_rule(4),
      build_triangle_rule(5), build_triangle_rule(6), build_triangle_rule(8),
      build_triangle_rule(9), build_triangle_rule(10)};
  if (min_degree < 1 || min_degree > 10) {
    throw std::invalid_argument("triangle rule degree must be in 1..10, got " +
                                std::to_string(min_degree));
  }
  for (const auto& r : rules) {
    if (r.degree >= min_degree) return r;
  }
  return rules.back();
}

const EdgeRule& edge_rule(int n_points) {
  static const std::array<EdgeRule, 6> rules{build_edge_rule(1), build_edge_rule(2),
                                             build_edge_rule(3), build_edge_rule(4),
                                             build_edge_rule(5), build_edge_rule(6)};
  if (n_points < 1 || n_points > 6) {
    throw std::invalid_argument("edge rule point count must be in 1..6, got " +
                                std::to_string(n_points));
  }
  return rules[n_points - 1];
}

}  // namespace sgfem
