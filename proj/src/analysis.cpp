#include "sgfem/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "sgfem/quadrature.hpp"
#include "sgfem/solver.hpp"

namespace sgfem {

namespace {

Eigen::Vector3d bary(const std::array<double, 3>& p) { return {p[0], p[1], p[2]}; }

// Local coefficients of component c of a full-space vector on element k.
Eigen::VectorXd local_component(const Discretization& disc, const Eigen::VectorXd& dofs, int k,
                                int c) {
  const auto& d = disc.dofmap().element_dofs(k);
  const int off = c * disc.dofmap().scalar_size();
  Eigen::VectorXd out(d.size());
  for (std::size_t j = 0; j < d.size(); ++j) out[j] = dofs[off + d[j]];
  return out;
}

void check_size(const Discretization& disc, const Eigen::VectorXd& dofs) {
  if (dofs.size() != disc.dofmap().size()) {
    std::ostringstream msg;
    msg << "DOF vector has size " << dofs.size() << ", expected " << disc.dofmap().size();
    throw std::invalid_argument(msg.str());
  }
}

double hess_sq(const Mat2& h) { return h(0, 0) * h(0, 0) + h(0, 1) * h(0, 1) + h(1, 1) * h(1, 1); }

// Local edge index of global edge e in triangle k, and whether the local
// parameter runs against the global lo -> hi direction.
std::pair<int, bool> local_edge(const Mesh& mesh, int k, int e) {
  const auto& te = mesh.triangle_edges(k);
  for (int i = 0; i < 3; ++i) {
    if (te[i] == e) {
      const bool reversed = mesh.triangle(k)[(i + 1) % 3] != mesh.edge(e).vertices[0];
      return {i, reversed};
    }
  }
  throw std::logic_error("edge not incident to triangle");
}

Eigen::Vector3d edge_point(int i, double t) {
  Eigen::Vector3d l = Eigen::Vector3d::Zero();
  l[(i + 1) % 3] = 1.0 - t;
  l[(i + 2) % 3] = t;
  return l;
}

}  // namespace

EnergyError energy_error(const Discretization& disc, const Eigen::VectorXd& dofs,
                         const ManufacturedField& exact, double iota, ErrorNorm norm) {
  check_size(disc, dofs);
  const TriangleRule& rule = volume_rule();
  const bool morley = disc.kind() == ElementKind::Morley && norm == ErrorNorm::MorleyPi1;
  double eg = 0.0, eh = 0.0, ug = 0.0, uh = 0.0;

  for (int k = 0; k < disc.mesh().num_triangles(); ++k) {
    const LocalBasis& b = disc.basis(k);
    const ElementGeometry& g = b.geometry();
    const ShapeTable t = b.tabulate(volume_table());
    const auto G = g.grad_lambda_matrix();
    for (int c = 0; c < 2; ++c) {
      const Eigen::VectorXd lc = local_component(disc, dofs, k, c);
      const Eigen::VectorXd gx = t.dx.transpose() * lc, gy = t.dy.transpose() * lc;
      const Eigen::VectorXd hxx = t.dxx.transpose() * lc, hxy = t.dxy.transpose() * lc,
                            hyy = t.dyy.transpose() * lc;
      if (morley) {
        Eigen::Vector3d nodal_u;
        for (int i = 0; i < 3; ++i) nodal_u[i] = exact.d(c, 0, 0, g.vertices[i]);
        const Eigen::Vector3d nodal_h = disc.pi1(k) * lc;
        const Vec2 gu = G.transpose() * nodal_u;
        const Vec2 gh = G.transpose() * nodal_h;
        eg += g.area * (gu - gh).squaredNorm();
        ug += g.area * gu.squaredNorm();
      }
      for (int q = 0; q < rule.size(); ++q) {
        const Vec2 x = g.point(bary(rule.points[q]));
        const double w = rule.weights[q] * g.area;
        const Vec2 du(exact.d(c, 1, 0, x), exact.d(c, 0, 1, x));
        Mat2 H = exact.hessian(c, x);
        if (!morley) {
          eg += w * (du - Vec2(gx[q], gy[q])).squaredNorm();
          ug += w * du.squaredNorm();
        }
        Mat2 Hh;
        Hh << hxx[q], hxy[q], hxy[q], hyy[q];
        eh += w * hess_sq(H - Hh);
        uh += w * hess_sq(H);
      }
    }
  }
  EnergyError out;
  out.absolute = std::sqrt(eg) + iota * std::sqrt(eh);
  out.exact_norm = std::sqrt(ug) + iota * std::sqrt(uh);
  out.relative = out.exact_norm > 0.0 ? out.absolute / out.exact_norm : out.absolute;
  return out;
}

DiscreteNorms discrete_norms(const Discretization& disc, const Eigen::VectorXd& dofs) {
  check_size(disc, dofs);
  const TriangleRule& rule = triangle_rule(8);
  DiscreteNorms n;
  for (int k = 0; k < disc.mesh().num_triangles(); ++k) {
    const LocalBasis& b = disc.basis(k);
    const ElementGeometry& g = b.geometry();
    const auto G = g.grad_lambda_matrix();
    for (int c = 0; c < 2; ++c) {
      const Eigen::VectorXd lc = local_component(disc, dofs, k, c);
      BaryPoly v;
      for (int j = 0; j < b.size(); ++j) v += lc[j] * b.shape(j);
      for (int q = 0; q < rule.size(); ++q) {
        const Eigen::Vector3d l = bary(rule.points[q]);
        const double w = rule.weights[q] * g.area;
        n.grad2 += w * v.gradient(l, G).squaredNorm();
        n.hess2 += w * hess_sq(v.hessian(l, G));
      }
      Eigen::Vector3d nodal;
      for (int i = 0; i < 3; ++i) nodal[i] = v.value(Eigen::Vector3d::Unit(i));
      n.grad_pi1_2 += g.area * (G.transpose() * nodal).squaredNorm();
    }
  }
  return n;
}

std::vector<std::optional<double>> convergence_rates(const std::vector<double>& errors) {
  std::vector<std::optional<double>> r(errors.size());
  for (std::size_t l = 1; l < errors.size(); ++l) r[l] = std::log2(errors[l - 1] / errors[l]);
  return r;
}

std::vector<ConvergenceReport> convergence_study(
    const StudyConfig& config,
    const std::function<void(const ConvergenceReport&, const ConvergenceRow&)>& progress) {
  if (config.levels < 1) throw std::invalid_argument("levels must be at least 1");
  if (config.iotas.empty()) throw std::invalid_argument("at least one iota value is required");

  std::vector<Mesh> meshes{config.base};
  for (int l = 1; l < config.levels; ++l) meshes.push_back(refine(meshes.back()));

  std::vector<double> iotas = config.iotas;
  std::sort(iotas.begin(), iotas.end(), std::greater<>());

  std::vector<ConvergenceReport> reports;
  for (double iota : iotas) {
    MaterialParams mat{config.lambda, config.mu, iota};
    mat.validate();
    const ManufacturedField u = make_example(config.example, iota);
    const VectorField f = source(u, mat);

    ConvergenceReport rep;
    rep.kind = config.kind;
    rep.example = config.example;
    rep.iota = iota;
    rep.lambda = config.lambda;
    rep.mu = config.mu;
    rep.mesh = config.mesh_label;
    std::vector<double> errs;
    for (int l = 0; l < config.levels; ++l) {
      const Discretization disc(meshes[l], config.kind);
      const SparseSystem sys = assemble(disc, mat, f);
      SolveReport sol;
      try {
        sol = solve(sys);
      } catch (const SolverError& err) {
        std::ostringstream msg;
        msg << err.what() << " (iota " << iota << ", level " << l << ")";
        throw SolverError(msg.str(), err.best_residual());
      }
      const EnergyError e = energy_error(disc, expand(sys, sol.solution), u, iota, config.norm);
      ConvergenceRow row;
      row.level = l;
      row.h = meshes[l].max_diameter();
      row.dofs = static_cast<int>(sys.retained.size());
      row.energy_err = e.absolute;
      row.rel_energy_err = e.relative;
      errs.push_back(e.relative);
      row.rate = convergence_rates(errs).back();
      rep.rows.push_back(row);
      if (progress) progress(rep, row);
    }
    reports.push_back(std::move(rep));
  }
  return reports;
}

namespace {

// |grad eps|^2 as the quadratic form x^T Q x on the six second derivatives.
Eigen::Matrix<double, 6, 6> korn_form() {
  // Rows: d_x e11, d_y e11, d_x e22, d_y e22, sqrt2 d_x e12, sqrt2 d_y e12.
  Eigen::Matrix<double, 6, 6> B = Eigen::Matrix<double, 6, 6>::Zero();
  enum { v1xx, v1xy, v1yy, v2xx, v2xy, v2yy };
  B(0, v1xx) = 1.0;
  B(1, v1xy) = 1.0;
  B(2, v2xy) = 1.0;
  B(3, v2yy) = 1.0;
  const double r = std::sqrt(0.5);
  B(4, v1xy) = r;
  B(4, v2xx) = r;
  B(5, v1yy) = r;
  B(5, v2xy) = r;
  return B.transpose() * B;
}

}  // namespace

double korn_ratio(const SecondDerivs& d) {
  const double v1xx = d[0], v1xy = d[1], v1yy = d[2], v2xx = d[3], v2xy = d[4], v2yy = d[5];
  const double num = v1xx * v1xx + v1xy * v1xy + v2xy * v2xy + v2yy * v2yy +
                     0.5 * (v1xy + v2xx) * (v1xy + v2xx) + 0.5 * (v2xy + v1yy) * (v2xy + v1yy);
  double den = 0.0;
  for (double x : d) den += x * x;
  return num / den;
}

KornResult korn_ratio_min(int n_samples, std::uint64_t seed) {
  if (n_samples < 1) throw std::invalid_argument("n_samples must be positive");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  KornResult res;
  res.sampled_min = std::numeric_limits<double>::infinity();
  for (int s = 0; s < n_samples; ++s) {
    SecondDerivs d;
    for (double& x : d) x = normal(rng);
    const double r = korn_ratio(d);
    if (r < res.sampled_min) {
      res.sampled_min = r;
      res.argmin = d;
    }
  }

  const auto Q = korn_form();
  Eigen::Matrix<double, 6, 1> x = Eigen::Map<const Eigen::Matrix<double, 6, 1>>(res.argmin.data());
  x.normalize();
  for (int it = 0; it < 2000; ++it) {
    const double R = x.dot(Q * x);
    const Eigen::Matrix<double, 6, 1> grad = Q * x - R * x;
    if (grad.norm() < 1e-15) break;
    x -= 0.5 * grad;
    x.normalize();
  }
  SecondDerivs best;
  for (int i = 0; i < 6; ++i) best[i] = x[i];
  res.directed_min = std::min(korn_ratio(best), res.sampled_min);
  if (korn_ratio(best) <= res.sampled_min) res.argmin = best;
  return res;
}

CoercivityResult coercivity_check(const Discretization& disc, const MaterialParams& mat,
                                  int n_trials, std::uint64_t seed) {
  mat.validate();
  const SparseSystem sys = assemble(disc, mat, [](const Vec2&) { return Vec2::Zero(); });
  const bool morley = disc.kind() == ElementKind::Morley;
  CoercivityResult res;
  res.constant = morley ? 0.5 : 2.0 - std::sqrt(2.0);
  res.min_ratio = std::numeric_limits<double>::infinity();
  const int n = static_cast<int>(sys.retained.size());
  if (n == 0) return res;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  auto trial = [&](const Eigen::VectorXd& x) {
    const double a = x.dot(sys.matrix * x);
    const DiscreteNorms nm = discrete_norms(disc, expand(sys, x));
    const double norm2 = (morley ? nm.grad_pi1_2 : nm.grad2) + mat.iota * mat.iota * nm.hess2;
    res.min_ratio = std::min(res.min_ratio, a / (res.constant * mat.mu * norm2));
    ++res.trials;
  };
  const int n_unit = std::min(n, 4);
  for (int t = 0; t < n_trials; ++t) {
    Eigen::VectorXd x(n);
    if (t < n_unit) {
      x = Eigen::VectorXd::Unit(n, (t * (n - 1)) / std::max(1, n_unit - 1));
    } else {
      for (int i = 0; i < n; ++i) x[i] = uni(rng);
    }
    trial(x);
  }
  return res;
}

std::vector<Eigen::VectorXd> localize(const Discretization& disc, const Eigen::VectorXd& scalar_dofs) {
  if (scalar_dofs.size() != disc.dofmap().scalar_size())
    throw std::invalid_argument("scalar DOF vector has the wrong size");
  std::vector<Eigen::VectorXd> out(disc.mesh().num_triangles());
  for (int k = 0; k < disc.mesh().num_triangles(); ++k) {
    const auto& d = disc.dofmap().element_dofs(k);
    out[k].resize(d.size());
    for (std::size_t j = 0; j < d.size(); ++j) out[k][j] = scalar_dofs[d[j]];
  }
  return out;
}

JumpResult normal_jumps(const Discretization& disc, const std::vector<Eigen::VectorXd>& local) {
  const Mesh& mesh = disc.mesh();
  const EdgeRule& rule = edge_rule(4);
  JumpResult res;
  for (int e = 0; e < mesh.num_edges(); ++e) {
    const Edge& edge = mesh.edge(e);
    if (edge.boundary) continue;
    std::array<double, 2> mean{};
    for (int s = 0; s < 2; ++s) {
      const int k = edge.triangles[s];
      const auto [i, reversed] = local_edge(mesh, k, e);
      const LocalBasis& b = disc.basis(k);
      for (int q = 0; q < rule.size(); ++q) {
        const Eigen::Vector3d l = edge_point(i, reversed ? 1.0 - rule.points[q] : rule.points[q]);
        Vec2 grad = Vec2::Zero();
        for (int j = 0; j < b.size(); ++j) grad += local[k][j] * b.gradient(j, l);
        mean[s] += rule.weights[q] * grad.dot(edge.normal);
      }
      res.scale = std::max(res.scale, std::abs(mean[s]));
    }
    res.max_jump = std::max(res.max_jump, std::abs(mean[0] - mean[1]));
  }
  return res;
}

double trace_jumps(const Discretization& disc, const std::vector<Eigen::VectorXd>& local, int n_points) {
  const Mesh& mesh = disc.mesh();
  double worst = 0.0;
  for (int e = 0; e < mesh.num_edges(); ++e) {
    const Edge& edge = mesh.edge(e);
    if (edge.boundary) continue;
    for (int p = 0; p < n_points; ++p) {
      const double s = (p + 0.5) / n_points;
      std::array<double, 2> val{};
      for (int side = 0; side < 2; ++side) {
        const int k = edge.triangles[side];
        const auto [i, reversed] = local_edge(mesh, k, e);
        val[side] = evaluate(disc.basis(k), local[k], edge_point(i, reversed ? 1.0 - s : s));
      }
      worst = std::max(worst, std::abs(val[0] - val[1]));
    }
  }
  return worst;
}

JumpResult jump_check(const Discretization& disc, int n_trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  JumpResult res;
  for (int t = 0; t < n_trials; ++t) {
    Eigen::VectorXd w(disc.dofmap().scalar_size());
    for (int i = 0; i < w.size(); ++i) w[i] = uni(rng);
    const JumpResult r = normal_jumps(disc, localize(disc, w));
    res.max_jump = std::max(res.max_jump, r.max_jump);
    res.scale = std::max(res.scale, r.scale);
  }
  return res;
}

Eigen::VectorXd interpolate_field(const Discretization& disc, const ManufacturedField& u) {
  const int Ns = disc.dofmap().scalar_size();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(2 * Ns);
  for (int k = 0; k < disc.mesh().num_triangles(); ++k) {
    const auto& d = disc.dofmap().element_dofs(k);
    for (int c = 0; c < 2; ++c) {
      const ScalarFunction fc{[&u, c](const Vec2& p) { return u.d(c, 0, 0, p); },
                              [&u, c](const Vec2& p) { return Vec2(u.d(c, 1, 0, p), u.d(c, 0, 1, p)); }};
      const Eigen::VectorXd lc = interpolate(disc.basis(k), fc);
      for (std::size_t j = 0; j < d.size(); ++j) out[c * Ns + d[j]] = lc[j];
    }
  }
  return out;
}

Vec2 point_value(const Discretization& disc, const Eigen::VectorXd& dofs, const Vec2& p) {
  check_size(disc, dofs);
  constexpr double tol = 1e-12;
  for (int k = 0; k < disc.mesh().num_triangles(); ++k) {
    const LocalBasis& b = disc.basis(k);
    const Eigen::Vector3d l = b.geometry().barycentric(p);
    if (l.minCoeff() < -tol) continue;
    return {evaluate(b, local_component(disc, dofs, k, 0), l),
            evaluate(b, local_component(disc, dofs, k, 1), l)};
  }
  std::ostringstream msg;
  msg << "point (" << p.x() << ", " << p.y() << ") lies outside the mesh";
  throw std::out_of_range(msg.str());
}

}  // namespace sgfem
