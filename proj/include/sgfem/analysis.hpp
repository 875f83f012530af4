#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sgfem/assembly.hpp"
#include "sgfem/manufactured.hpp"

namespace sgfem {

struct EnergyError {
  double absolute = 0.0;
  double relative = 0.0;
  double exact_norm = 0.0;  // |||u|||
};

enum class ErrorNorm {
  /// ||grad_h (u - u_h)|| + iota ||grad_h^2 (u - u_h)|| for every family.
  Broken,
  /// For Morley, the first term becomes ||grad (pi_1 u - pi_1 u_h)||;
  /// other families are unaffected.
  MorleyPi1,
};

/// Energy error and |||u|||, with the Hessian norm summing
/// h_xx^2 + h_xy^2 + h_yy^2 per component. `dofs` is a full-space vector.
EnergyError energy_error(const Discretization& disc, const Eigen::VectorXd& dofs,
                         const ManufacturedField& exact, double iota,
                         ErrorNorm norm = ErrorNorm::Broken);

/// Squared broken norms of a discrete field, computed with a rule and an
/// evaluation path separate from assembly.
struct DiscreteNorms {
  double grad2 = 0.0;      // ||grad_h v||^2
  double hess2 = 0.0;      // ||grad_h^2 v||^2
  double grad_pi1_2 = 0.0; // ||grad pi_1 v||^2
};
DiscreteNorms discrete_norms(const Discretization& disc, const Eigen::VectorXd& dofs);

/// Rates log2(e_{l-1} / e_l); the first entry is empty.
std::vector<std::optional<double>> convergence_rates(const std::vector<double>& errors);

struct ConvergenceRow {
  int level = 0;
  double h = 0.0;
  int dofs = 0;
  double energy_err = 0.0;
  double rel_energy_err = 0.0;
  std::optional<double> rate;
};

struct ConvergenceReport {
  ElementKind kind = ElementKind::NTW;
  std::string example;
  double iota = 1.0;
  double lambda = 10.0;
  double mu = 1.0;
  std::string mesh;
  std::vector<ConvergenceRow> rows;
};

struct StudyConfig {
  ElementKind kind = ElementKind::NTW;
  std::string example = "smooth";
  std::vector<double> iotas{1.0};
  int levels = 4;
  double lambda = 10.0;
  double mu = 1.0;
  Mesh base = make_structured(8);
  std::string mesh_label = "structured:8";
  ErrorNorm norm = ErrorNorm::Broken;
};

/// One report per iota, rows ordered by level; mesh l is the base mesh
/// refined l times. Solver failures are rethrown with iota and level.
std::vector<ConvergenceReport> convergence_study(
    const StudyConfig& config,
    const std::function<void(const ConvergenceReport&, const ConvergenceRow&)>& progress = {});

/// Second derivatives of v = (v1, v2): v1_xx, v1_xy, v1_yy, v2_xx, v2_xy, v2_yy.
using SecondDerivs = std::array<double, 6>;

/// |grad eps(v)|^2 / |grad^2 v|^2 for one sample.
double korn_ratio(const SecondDerivs& d);

struct KornResult {
  double sampled_min = 0.0;
  double directed_min = 0.0;
  SecondDerivs argmin{};
  double bound = 1.0 - 1.0 / std::sqrt(2.0);
};

/// Minimum of korn_ratio over n_samples Gaussian samples, followed by
/// gradient descent on the Rayleigh quotient from the worst sample.
KornResult korn_ratio_min(int n_samples, std::uint64_t seed = 1);

struct CoercivityResult {
  double min_ratio = 0.0;  // a_h(v,v) / (c mu |||v|||^2)
  double constant = 0.0;   // c: 2 - sqrt2, or 1/2 for Morley
  int trials = 0;
};

/// Random retained-DOF vectors plus a few unit vectors. The norm is
/// ||grad_h v||^2 + iota^2 ||grad_h^2 v||^2 (Morley: grad pi_1 v).
CoercivityResult coercivity_check(const Discretization& disc, const MaterialParams& mat,
                                  int n_trials, std::uint64_t seed = 7);

struct JumpResult {
  double max_jump = 0.0;   // max over interior edges and trials
  double scale = 0.0;      // max |mean d_n w| seen, for relative judgement
};

/// Per-element coefficient vectors of a scalar global field.
std::vector<Eigen::VectorXd> localize(const Discretization& disc, const Eigen::VectorXd& scalar_dofs);

/// Max over interior edges of |mean of [d_n w]|, w given elementwise.
JumpResult normal_jumps(const Discretization& disc, const std::vector<Eigen::VectorXd>& local);
/// Max over interior edges of |[w]| at n_points points per edge.
double trace_jumps(const Discretization& disc, const std::vector<Eigen::VectorXd>& local,
                   int n_points = 10);

/// normal_jumps over n_trials random global scalar fields.
JumpResult jump_check(const Discretization& disc, int n_trials, std::uint64_t seed = 11);

/// Full-space DOF vector of the element interpolant of `u`.
Eigen::VectorXd interpolate_field(const Discretization& disc, const ManufacturedField& u);

/// Discrete vector field at a point of the mesh; throws std::out_of_range
/// if no element contains it.
Vec2 point_value(const Discretization& disc, const Eigen::VectorXd& dofs, const Vec2& p);

}  // namespace sgfem
