#include "sgfem/solver.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseCholesky>

namespace sgfem {

namespace {

double relative_residual(const Eigen::SparseMatrix<double>& A, const Eigen::VectorXd& x,
                         const Eigen::VectorXd& b, double bnorm) {
  const double r = (A * x - b).norm();
  return bnorm > 0.0 ? r / bnorm : r;
}

}  // namespace

SolveReport solve(const Eigen::SparseMatrix<double>& A, const Eigen::VectorXd& b,
                  const SolverOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const Eigen::Index n = A.rows();
  if (A.cols() != n || b.size() != n) throw std::invalid_argument("solve: dimension mismatch");

  SolveReport rep;
  auto finish = [&](SolveReport& r) -> SolveReport& {
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  };
  const double bnorm = b.norm();
  if (n == 0 || bnorm == 0.0) {
    rep.solution = Eigen::VectorXd::Zero(n);
    rep.method = "trivial";
    return finish(rep);
  }

  double best = std::numeric_limits<double>::infinity();
  Eigen::VectorXd best_x;

  if (!opts.skip_direct) {
    // Symmetric Jacobi scaling: solve (D A D) y = D b, x = D y.
    Eigen::VectorXd d = A.diagonal();
    bool positive_diag = (d.array() > 0.0).all();
    if (positive_diag) {
      d = d.cwiseSqrt().cwiseInverse();
      Eigen::SparseMatrix<double> S = d.asDiagonal() * A * d.asDiagonal();
      Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt(S);
      if (ldlt.info() == Eigen::Success) {
        Eigen::VectorXd y = ldlt.solve(d.cwiseProduct(b));
        Eigen::VectorXd x = d.cwiseProduct(y);
        const double res = relative_residual(A, x, b, bnorm);
        if (std::isfinite(res) && res < best) {
          best = res;
          best_x = x;
        }
        if (res <= opts.residual_tol) {
          rep.solution = std::move(x);
          rep.relative_residual = res;
          rep.method = "ldlt";
          return finish(rep);
        }
      }
    }
  }

  Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper,
                           Eigen::DiagonalPreconditioner<double>>
      cg;
  cg.setTolerance(opts.cg_tol);
  cg.setMaxIterations(std::max<int>(1, static_cast<int>(opts.cg_cap_factor * std::sqrt(double(n)))));
  cg.compute(A);
  Eigen::VectorXd x;
  if (best_x.size() == n) x = cg.solveWithGuess(b, best_x);
  else x = cg.solve(b);
  const double res = relative_residual(A, x, b, bnorm);
  if (std::isfinite(res) && res < best) best = res;
  if (res <= opts.residual_tol) {
    rep.solution = std::move(x);
    rep.relative_residual = res;
    rep.method = "cg";
    rep.iterations = static_cast<int>(cg.iterations());
    return finish(rep);
  }
  std::ostringstream msg;
  msg << "linear solve failed for n = " << n << ": best relative residual " << best
      << " exceeds " << opts.residual_tol;
  throw SolverError(msg.str(), best);
}

}  // namespace sgfem
