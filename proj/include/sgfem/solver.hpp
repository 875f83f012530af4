#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "sgfem/assembly.hpp"

namespace sgfem {

struct SolverOptions {
  /// Accept a solution when ||A x - b|| <= residual_tol * ||b||.
  double residual_tol = 1e-8;
  double cg_tol = 1e-10;
  /// Iteration cap is cg_cap_factor * sqrt(n).
  double cg_cap_factor = 50.0;
  bool skip_direct = false;
};

struct SolveReport {
  Eigen::VectorXd solution;
  double relative_residual = 0.0;
  std::string method;  // "ldlt" or "cg"
  int iterations = 0;
  double seconds = 0.0;
};

class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, double best_residual)
      : std::runtime_error(what), best_residual_(best_residual) {}
  double best_residual() const { return best_residual_; }

 private:
  double best_residual_;
};

/// Sparse LDL^T on the Jacobi-scaled matrix, with a diagonally
/// preconditioned CG fallback. Throws SolverError if neither meets the
/// residual tolerance.
SolveReport solve(const Eigen::SparseMatrix<double>& A, const Eigen::VectorXd& b,
                  const SolverOptions& opts = {});
inline SolveReport solve(const SparseSystem& sys, const SolverOptions& opts = {}) {
  return solve(sys.matrix, sys.rhs, opts);
}

}  // namespace sgfem
