#pragma once

#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sgfem/analysis.hpp"
#include "sgfem/quadrature.hpp"

namespace sgfem {

enum ExitCode : int { kExitOk = 0, kExitValidation = 1, kExitSolver = 2, kExitVerification = 3 };

struct RunConfig {
  ElementKind kind = ElementKind::NTW;
  std::string example = "smooth";
  std::vector<double> iotas{1.0, 1e-2, 1e-4, 1e-6};
  double lambda = 10.0;
  double mu = 1.0;
  std::string mesh = "structured:8";
  int levels = 4;
  std::string out;  // empty: standard output
  std::string format = "csv";
  ErrorNorm norm = ErrorNorm::Broken;

  /// Throws std::invalid_argument on any out-of-range field.
  void validate() const;
};

/// "structured:N" or "file:PATH".
Mesh mesh_from_source(const std::string& source);

/// make_structured(n) with interior vertices moved by up to
/// `fraction` of the cell size, deterministically from `seed`.
Mesh jittered_structured(int n, double fraction, std::uint64_t seed);

/// Random counter-clockwise triangle inside the unit square with
/// chunkiness at most `max_chunkiness`.
ElementGeometry random_triangle(std::mt19937_64& rng, double max_chunkiness = 20.0);

/// Shortest decimal string that reads back to the same double.
std::string format_double(double x);

std::string to_csv(const std::vector<ConvergenceReport>& reports);
/// Inverse of to_csv; throws std::invalid_argument on malformed input.
std::vector<ConvergenceReport> parse_csv(std::istream& in);
/// One iota x h grid per report set, errors with rates underneath.
std::string to_markdown(const std::vector<ConvergenceReport>& reports);

int cmd_convergence(const RunConfig& config, std::ostream& out, std::ostream& log);

struct VerifyOptions {
  /// Rule checked by the quadrature suite; defaults to the volume rule.
  const TriangleRule* rule = nullptr;
  int korn_samples = 10000;
  int coercivity_trials = 50;
  int duality_triangles = 200;
  std::uint64_t seed = 2024;
};

/// Suites: quadrature, korn, elements, coercivity, jumps, manufactured, all.
/// Prints one PASS/FAIL line per check.
int cmd_verify(const std::string& suite, std::ostream& out, const VerifyOptions& opts = {});

/// Solves once on the mesh refined levels - 1 times with iotas.front().
int cmd_solve(const RunConfig& config, const std::vector<Vec2>& points, std::ostream& out,
              std::ostream& log);

/// Finite-difference reconstruction of the source term, used by the
/// manufactured suite: central differences of u give g, then of g give
/// Lap g, each Richardson-extrapolated.
Vec2 source_fd(const ManufacturedField& u, const MaterialParams& mat, const Vec2& p);

}  // namespace sgfem
