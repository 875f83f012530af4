#include "sgfem/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "sgfem/solver.hpp"

namespace sgfem {

void RunConfig::validate() const {
  if (levels < 1) throw std::invalid_argument("levels must be at least 1");
  if (iotas.empty()) throw std::invalid_argument("at least one iota value is required");
  for (double iota : iotas) MaterialParams{lambda, mu, iota}.validate();
  if (example != "smooth" && example != "layer")
    throw std::invalid_argument("unknown example '" + example + "' (expected smooth or layer)");
  if (format != "csv" && format != "markdown")
    throw std::invalid_argument("unknown format '" + format + "' (expected csv or markdown)");
}

Mesh mesh_from_source(const std::string& source) {
  const auto colon = source.find(':');
  const std::string kind = source.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : source.substr(colon + 1);
  if (kind == "structured") {
    int n = 0;
    const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), n);
    if (ec != std::errc() || ptr != arg.data() + arg.size() || n < 1)
      throw std::invalid_argument("bad structured mesh size in '" + source + "'");
    return make_structured(n);
  }
  if (kind == "file" && !arg.empty()) return load_mesh_file(arg);
  throw std::invalid_argument("mesh source must be structured:N or file:PATH, got '" + source + "'");
}

Mesh jittered_structured(int n, double fraction, std::uint64_t seed) {
  const Mesh base = make_structured(n);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-fraction / n, fraction / n);
  std::vector<Vec2> v = base.vertices();
  for (int i = 0; i < base.num_vertices(); ++i) {
    if (!base.is_boundary_vertex(i)) v[i] += Vec2(uni(rng), uni(rng));
  }
  return Mesh(std::move(v), base.triangles());
}

ElementGeometry random_triangle(std::mt19937_64& rng, double max_chunkiness) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (;;) {
    Vec2 a(uni(rng), uni(rng)), b(uni(rng), uni(rng)), c(uni(rng), uni(rng));
    const double cross = (b - a).x() * (c - a).y() - (b - a).y() * (c - a).x();
    if (std::abs(cross) < 1e-3) continue;
    if (cross < 0) std::swap(b, c);
    ElementGeometry g = make_geometry(a, b, c);
    if (g.chunkiness <= max_chunkiness) return g;
  }
}

std::string format_double(double x) {
  if (x == 0.0) x = 0.0;  // print -0 as 0
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

namespace {

constexpr const char* kCsvHeader = "element,example,iota,level,h,dofs,energy_err,rel_energy_err,rate";

double parse_number(const std::string& s) {
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("bad number '" + s + "' in CSV");
  return x;
}

int parse_int(const std::string& s) {
  int x = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("bad integer '" + s + "' in CSV");
  return x;
}

// 1 -> "1e+0", 0.01 -> "1e-2", 0.025 -> "2.5e-2".
std::string format_iota(double x) {
  int e = static_cast<int>(std::floor(std::log10(x)));
  double m = x / std::pow(10.0, e);
  if (m >= 9.9999999) {
    m /= 10.0;
    ++e;
  }
  std::ostringstream s;
  s << std::setprecision(3) << m << (e < 0 ? "e-" : "e+") << std::abs(e);
  return s.str();
}

std::string sci(double x, int digits = 2) {
  std::ostringstream s;
  s << std::scientific << std::setprecision(digits) << x;
  return s.str();
}

std::string fixed(double x, int digits = 2) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << x;
  return s.str();
}

}  // namespace

std::string to_csv(const std::vector<ConvergenceReport>& reports) {
  std::ostringstream s;
  s << kCsvHeader << '\n';
  for (const auto& r : reports) {
    for (const auto& row : r.rows) {
      s << to_string(r.kind) << ',' << r.example << ',' << format_double(r.iota) << ',' << row.level
        << ',' << format_double(row.h) << ',' << row.dofs << ',' << format_double(row.energy_err)
        << ',' << format_double(row.rel_energy_err) << ',';
      if (row.rate) s << format_double(*row.rate);
      s << '\n';
    }
  }
  return s.str();
}

std::vector<ConvergenceReport> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader)
    throw std::invalid_argument("CSV header does not match '" + std::string(kCsvHeader) + "'");
  std::vector<ConvergenceReport> reports;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (!line.empty() && line.back() == ',') f.emplace_back();
    if (f.size() != 9)
      throw std::invalid_argument("CSV line " + std::to_string(line_no) + " has " +
                                  std::to_string(f.size()) + " fields, expected 9");
    const ElementKind kind = parse_element_kind(f[0]);
    const double iota = parse_number(f[2]);
    if (reports.empty() || reports.back().kind != kind || reports.back().example != f[1] ||
        reports.back().iota != iota) {
      ConvergenceReport r;
      r.kind = kind;
      r.example = f[1];
      r.iota = iota;
      reports.push_back(r);
    }
    ConvergenceRow row;
    row.level = parse_int(f[3]);
    row.h = parse_number(f[4]);
    row.dofs = parse_int(f[5]);
    row.energy_err = parse_number(f[6]);
    row.rel_energy_err = parse_number(f[7]);
    if (!f[8].empty()) row.rate = parse_number(f[8]);
    reports.back().rows.push_back(row);
  }
  return reports;
}

std::string to_markdown(const std::vector<ConvergenceReport>& reports) {
  std::ostringstream s;
  std::string group;
  for (const auto& r : reports) {
    const std::string g = to_string(r.kind) + ", " + r.example + " example";
    if (g != group) {
      if (!group.empty()) s << '\n';
      group = g;
      s << "### " << g << "\n\n| iota \\ h |";
      for (const auto& row : r.rows) s << ' ' << sci(row.h) << " |";
      s << "\n|---|";
      for (std::size_t i = 0; i < r.rows.size(); ++i) s << "---|";
      s << '\n';
    }
    s << "| " << format_iota(r.iota) << " |";
    for (const auto& row : r.rows) s << ' ' << sci(row.rel_energy_err) << " |";
    s << "\n| rate |";
    for (const auto& row : r.rows) s << ' ' << (row.rate ? fixed(*row.rate) : "") << " |";
    s << '\n';
  }
  return s.str();
}

int cmd_convergence(const RunConfig& config, std::ostream& out, std::ostream& log) {
  std::vector<ConvergenceReport> reports;
  try {
    config.validate();
    StudyConfig sc;
    sc.kind = config.kind;
    sc.example = config.example;
    sc.iotas = config.iotas;
    sc.levels = config.levels;
    sc.lambda = config.lambda;
    sc.mu = config.mu;
    sc.base = mesh_from_source(config.mesh);
    sc.mesh_label = config.mesh;
    sc.norm = config.norm;
    reports = convergence_study(sc, [&](const ConvergenceReport& r, const ConvergenceRow& row) {
      log << to_string(r.kind) << " iota=" << format_iota(r.iota) << " level " << row.level
          << " dofs=" << row.dofs << " rel_err=" << sci(row.rel_energy_err, 3);
      if (row.rate) log << " rate=" << fixed(*row.rate);
      log << '\n';
    });
  } catch (const SolverError& e) {
    log << "error: " << e.what() << '\n';
    return kExitSolver;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  const std::string text = config.format == "csv" ? to_csv(reports) : to_markdown(reports);
  if (config.out.empty()) {
    out << text;
  } else {
    std::ofstream file(config.out);
    if (!file) {
      log << "error: cannot write '" << config.out << "'\n";
      return kExitValidation;
    }
    file << text;
  }
  return kExitOk;
}

Vec2 source_fd(const ManufacturedField& u, const MaterialParams& mat, const Vec2& p) {
  const double h_out = std::min(1e-2, mat.iota / 8.0);
  const double h_in = std::min(1e-3, h_out / 2.0);

  auto second = [](const auto& fn, const Vec2& x, const Vec2& dir, double h) {
    auto d2 = [&](double s) { return (fn(x + s * dir) - 2.0 * fn(x) + fn(x - s * dir)) / (s * s); };
    return (4.0 * d2(h / 2.0) - d2(h)) / 3.0;
  };
  auto mixed = [](const auto& fn, const Vec2& x, double h) {
    auto dxy = [&](double s) {
      return (fn(x + Vec2(s, s)) - fn(x + Vec2(s, -s)) - fn(x + Vec2(-s, s)) + fn(x + Vec2(-s, -s))) /
             (4.0 * s * s);
    };
    return (4.0 * dxy(h / 2.0) - dxy(h)) / 3.0;
  };
  const Vec2 ex(1.0, 0.0), ey(0.0, 1.0);

  auto g = [&](const Vec2& x) -> Vec2 {
    auto u1 = [&](const Vec2& y) { return u.d(0, 0, 0, y); };
    auto u2 = [&](const Vec2& y) { return u.d(1, 0, 0, y); };
    const double u1xx = second(u1, x, ex, h_in), u1yy = second(u1, x, ey, h_in);
    const double u2xx = second(u2, x, ex, h_in), u2yy = second(u2, x, ey, h_in);
    const double u1xy = mixed(u1, x, h_in), u2xy = mixed(u2, x, h_in);
    const double lm = mat.lambda + mat.mu;
    return {mat.mu * (u1xx + u1yy) + lm * (u1xx + u2xy), mat.mu * (u2xx + u2yy) + lm * (u1xy + u2yy)};
  };
  Vec2 lap;
  for (int c = 0; c < 2; ++c) {
    auto gc = [&](const Vec2& y) { return g(y)[c]; };
    lap[c] = second(gc, p, ex, h_out) + second(gc, p, ey, h_out);
  }
  return mat.iota * mat.iota * lap - g(p);
}

namespace {

struct Reporter {
  std::ostream& out;
  int failures = 0;

  void check(const std::string& name, bool ok, const std::string& detail) {
    out << (ok ? "PASS " : "FAIL ") << name << ": " << detail << '\n';
    if (!ok) ++failures;
  }
};

std::string vs(double value, const char* op, double bound) {
  return sci(value, 3) + " " + op + " " + sci(bound, 3);
}

double factorial(int n) { return n <= 1 ? 1.0 : n * factorial(n - 1); }

void suite_quadrature(Reporter& rep, const VerifyOptions& opts) {
  const TriangleRule& rule = opts.rule ? *opts.rule : volume_rule();
  double worst = 0.0;
  for (int a = 0; a <= rule.degree; ++a)
    for (int b = 0; a + b <= rule.degree; ++b)
      for (int c = 0; a + b + c <= rule.degree; ++c) {
        double s = 0.0;
        for (int q = 0; q < rule.size(); ++q)
          s += rule.weights[q] * std::pow(rule.points[q][0], a) * std::pow(rule.points[q][1], b) *
               std::pow(rule.points[q][2], c);
        const double exact = 2.0 * factorial(a) * factorial(b) * factorial(c) / factorial(a + b + c + 2);
        worst = std::max(worst, std::abs(s - exact) / exact);
      }
  rep.check("quadrature/exactness (degree " + std::to_string(rule.degree) + ")", worst <= 1e-13,
            vs(worst, "<=", 1e-13));
  double wmin = 1.0, pmin = 1.0;
  for (int q = 0; q < rule.size(); ++q) {
    wmin = std::min(wmin, rule.weights[q]);
    for (double l : rule.points[q]) pmin = std::min(pmin, l);
  }
  rep.check("quadrature/positive weights", wmin > 0.0, "min weight " + sci(wmin, 3));
  rep.check("quadrature/interior points", pmin > 0.0, "min barycentric " + sci(pmin, 3));
}

void suite_korn(Reporter& rep, const VerifyOptions& opts) {
  const KornResult k = korn_ratio_min(opts.korn_samples, opts.seed);
  const double m = std::min(k.sampled_min, k.directed_min);
  rep.check("korn/min ratio within [bound - 1e-12, bound + 0.05]",
            m >= k.bound - 1e-12 && m <= k.bound + 0.05,
            "min " + fixed(m, 9) + ", bound 1 - 1/sqrt2 = " + fixed(k.bound, 6));
  const double a = 1.0, b = -(1.0 + std::sqrt(2.0)) * a;
  const double r = korn_ratio({0.0, a, 0.0, b, 0.0, 0.0});
  rep.check("korn/extremal direction b = -(1 + sqrt2) a", std::abs(r - k.bound) <= 1e-10,
            "ratio " + fixed(r, 12));
}

// Random quartic with its gradient.
ScalarFunction random_quartic(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<std::array<double, 3>> terms;  // (coeff, i, j) for x^i y^j
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; i + j <= 4; ++j) terms.push_back({uni(rng), double(i), double(j)});
  auto value = [terms](const Vec2& p) {
    double s = 0.0;
    for (const auto& t : terms) s += t[0] * std::pow(p.x(), t[1]) * std::pow(p.y(), t[2]);
    return s;
  };
  auto grad = [terms](const Vec2& p) {
    Vec2 g = Vec2::Zero();
    for (const auto& t : terms) {
      if (t[1] > 0) g.x() += t[0] * t[1] * std::pow(p.x(), t[1] - 1) * std::pow(p.y(), t[2]);
      if (t[2] > 0) g.y() += t[0] * t[2] * std::pow(p.x(), t[1]) * std::pow(p.y(), t[2] - 1);
    }
    return g;
  };
  return {value, grad};
}

double specht_constraint_residual(const LocalBasis& b) {
  const ElementGeometry& g = b.geometry();
  const EdgeRule& rule = edge_rule(4);
  double worst = 0.0;
  for (int j = 0; j < b.size(); ++j)
    for (int e = 0; e < 3; ++e) {
      double s = 0.0;
      for (int q = 0; q < rule.size(); ++q) {
        const double t = rule.points[q], xi = 2.0 * t - 1.0;
        Eigen::Vector3d l = Eigen::Vector3d::Zero();
        l[(e + 1) % 3] = 1.0 - t;
        l[(e + 2) % 3] = t;
        s += rule.weights[q] * 0.5 * (3.0 * xi * xi - 1.0) * b.gradient(j, l).dot(g.normal[e]);
      }
      worst = std::max(worst, std::abs(s) * g.diameter);
    }
  return worst;
}

void suite_elements(Reporter& rep, const VerifyOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  double dual[4] = {0, 0, 0, 0};
  double constraint = 0.0;
  for (int t = 0; t < opts.duality_triangles; ++t) {
    const ElementGeometry g = random_triangle(rng);
    const LocalBasis bases[4] = {ntw_basis(g), ntw_affine_basis(g), specht_basis(g), morley_basis(g)};
    for (int i = 0; i < 4; ++i) {
      const Eigen::MatrixXd D = duality_matrix(bases[i]);
      dual[i] = std::max(dual[i], (D - Eigen::MatrixXd::Identity(D.rows(), D.cols())).cwiseAbs().maxCoeff());
    }
    constraint = std::max(constraint, specht_constraint_residual(bases[2]));
  }
  const char* names[4] = {"ntw", "ntw-affine", "specht", "morley"};
  for (int i = 0; i < 4; ++i)
    rep.check(std::string("elements/duality ") + names[i], dual[i] <= 1e-11, vs(dual[i], "<=", 1e-11));
  rep.check("elements/specht Legendre constraint", constraint <= 1e-12, vs(constraint, "<=", 1e-12));

  double affine = 0.0;
  for (int t = 0; t < 20; ++t) {
    const ElementGeometry g = random_triangle(rng);
    affine = std::max(affine, verify_affine_identity(g, random_quartic(rng)));
  }
  rep.check("elements/affine identity (quartics)", affine <= 1e-12, vs(affine, "<=", 1e-12));

  const Mesh mesh = jittered_structured(4, 0.2, opts.seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  for (ElementKind kind : {ElementKind::NTW, ElementKind::Specht}) {
    const Discretization disc(mesh, kind);
    Eigen::VectorXd w(disc.dofmap().scalar_size());
    for (int i = 0; i < w.size(); ++i) w[i] = uni(rng);
    const double jump = trace_jumps(disc, localize(disc, w));
    rep.check("elements/trace continuity " + to_string(kind), jump <= 1e-11, vs(jump, "<=", 1e-11));
  }
}

void suite_coercivity(Reporter& rep, const VerifyOptions& opts) {
  const Mesh meshes[2] = {make_structured(4), jittered_structured(4, 0.2, opts.seed)};
  const char* labels[2] = {"structured:4", "jittered:4"};
  for (int m = 0; m < 2; ++m)
    for (ElementKind kind : {ElementKind::NTW, ElementKind::Specht, ElementKind::Morley}) {
      const Discretization disc(meshes[m], kind);
      for (double iota : {1.0, 1e-2, 1e-6}) {
        const CoercivityResult c = coercivity_check(disc, {10.0, 1.0, iota}, opts.coercivity_trials, opts.seed);
        rep.check("coercivity/" + to_string(kind) + " " + labels[m] + " iota=" + format_iota(iota),
                  c.min_ratio >= 1.0 - 1e-9, "min ratio " + fixed(c.min_ratio, 6) + " (constant " +
                                                 fixed(c.constant, 6) + " mu)");
      }
    }
}

void suite_jumps(Reporter& rep, const VerifyOptions& opts) {
  const Mesh mesh = jittered_structured(4, 0.2, opts.seed);
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  for (ElementKind kind : {ElementKind::NTW, ElementKind::Specht, ElementKind::Morley}) {
    const Discretization disc(mesh, kind);
    const JumpResult j = jump_check(disc, 5, opts.seed);
    const double bound = 1e-10 * std::max(1.0, j.scale);
    rep.check("jumps/mean normal jump " + to_string(kind), j.max_jump <= bound, vs(j.max_jump, "<=", bound));

    std::vector<Eigen::VectorXd> local(mesh.num_triangles(), Eigen::VectorXd(disc.dofmap().local_size()));
    for (auto& v : local)
      for (int i = 0; i < v.size(); ++i) v[i] = uni(rng);
    const JumpResult bad = normal_jumps(disc, local);
    rep.check("jumps/negative control " + to_string(kind), bad.max_jump > 1e-3,
              "unshared field jump " + sci(bad.max_jump, 3) + " > 1e-3");
  }
}

void suite_manufactured(Reporter& rep, const VerifyOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> uni(0.02, 0.98);
  for (const char* name : {"smooth", "layer"})
    for (double iota : {1.0, 1e-2}) {
      const MaterialParams mat{10.0, 1.0, iota};
      const ManufacturedField u = make_example(name, iota);
      const VectorField f = source(u, mat);
      std::vector<Vec2> pts(50);
      double fmax = 0.0;
      for (auto& p : pts) {
        p = Vec2(uni(rng), uni(rng));
        fmax = std::max(fmax, f(p).norm());
      }
      double worst = 0.0;
      for (const auto& p : pts) {
        const Vec2 fa = f(p);
        worst = std::max(worst, (fa - source_fd(u, mat, p)).norm() / std::max(fa.norm(), 1e-2 * fmax));
      }
      rep.check(std::string("manufactured/source vs finite differences ") + name + " iota=" + format_iota(iota),
                worst <= 1e-4, vs(worst, "<=", 1e-4));
    }

  for (double iota : {1.0, 1e-2, 1e-6}) {
    const ManufacturedField u = example_layer(iota);
    double worst = 0.0;
    for (int i = 0; i < 25; ++i) {
      const double s = (i + 0.5) / 25.0;
      const std::array<std::pair<Vec2, Vec2>, 4> pts{{{Vec2(s, 0), Vec2(0, -1)},
                                                      {Vec2(s, 1), Vec2(0, 1)},
                                                      {Vec2(0, s), Vec2(-1, 0)},
                                                      {Vec2(1, s), Vec2(1, 0)}}};
      for (const auto& [p, n] : pts)
        for (int c = 0; c < 2; ++c) {
          worst = std::max(worst, std::abs(u.d(c, 0, 0, p)));
          worst = std::max(worst, std::abs(u.d(c, 1, 0, p) * n.x() + u.d(c, 0, 1, p) * n.y()));
        }
    }
    rep.check("manufactured/layer clamped boundary iota=" + format_iota(iota), worst <= 1e-10,
              vs(worst, "<=", 1e-10));
  }

  const ManufacturedField u = example_layer(1e-6);
  const VectorField f = source(u, {10.0, 1.0, 1e-6});
  bool finite = true;
  for (int i = 0; i <= 99 && finite; ++i)
    for (int j = 0; j <= 99; ++j) {
      const Vec2 p(i / 99.0, j / 99.0);
      if (!f(p).allFinite() || !u.value(p).allFinite()) finite = false;
    }
  rep.check("manufactured/layer iota=1e-6 finite on 100x100 grid", finite, finite ? "finite" : "non-finite value");
}

}  // namespace

int cmd_verify(const std::string& suite, std::ostream& out, const VerifyOptions& opts) {
  static const std::vector<std::pair<std::string, void (*)(Reporter&, const VerifyOptions&)>> suites{
      {"quadrature", suite_quadrature}, {"korn", suite_korn},   {"elements", suite_elements},
      {"coercivity", suite_coercivity}, {"jumps", suite_jumps}, {"manufactured", suite_manufactured}};
  Reporter rep{out};
  bool found = false;
  try {
    for (const auto& [name, fn] : suites) {
      if (suite == "all" || suite == name) {
        found = true;
        fn(rep, opts);
      }
    }
  } catch (const std::exception& e) {
    out << "FAIL " << suite << ": " << e.what() << '\n';
    return kExitVerification;
  }
  if (!found) {
    out << "error: unknown suite '" << suite << "'\n";
    return kExitValidation;
  }
  out << (rep.failures == 0 ? "all checks passed" : std::to_string(rep.failures) + " check(s) failed")
      << '\n';
  return rep.failures == 0 ? kExitOk : kExitVerification;
}

int cmd_solve(const RunConfig& config, const std::vector<Vec2>& points, std::ostream& out,
              std::ostream& log) {
  try {
    config.validate();
    for (const auto& p : points) {
      if (!(p.x() >= 0.0 && p.x() <= 1.0 && p.y() >= 0.0 && p.y() <= 1.0)) {
        std::ostringstream msg;
        msg << "probe point (" << p.x() << ", " << p.y() << ") is outside the unit square";
        throw std::invalid_argument(msg.str());
      }
    }
    Mesh mesh = mesh_from_source(config.mesh);
    for (int l = 1; l < config.levels; ++l) mesh = refine(mesh);
    const MaterialParams mat{config.lambda, config.mu, config.iotas.front()};
    const ManufacturedField u = make_example(config.example, mat.iota);
    const Discretization disc(mesh, config.kind);
    const SparseSystem sys = assemble(disc, mat, source(u, mat));
    const SolveReport sol = solve(sys);
    const Eigen::VectorXd x = expand(sys, sol.solution);
    const EnergyError e = energy_error(disc, x, u, mat.iota, config.norm);

    out << "element " << to_string(config.kind) << ", example " << config.example << ", iota "
        << format_iota(mat.iota) << ", h " << sci(mesh.max_diameter(), 3) << ", dofs "
        << sys.retained.size() << ", solver " << sol.method << " (residual "
        << sci(sol.relative_residual, 2) << ")\n";
    out << "energy error " << sci(e.absolute, 6) << ", relative " << sci(e.relative, 6) << '\n';
    out << "x,y,uh1,uh2,u1,u2\n";
    for (const auto& p : points) {
      const Vec2 uh = point_value(disc, x, p);
      const Vec2 ue = u.value(p);
      out << format_double(p.x()) << ',' << format_double(p.y()) << ',' << format_double(uh.x()) << ','
          << format_double(uh.y()) << ',' << format_double(ue.x()) << ',' << format_double(ue.y()) << '\n';
    }
  } catch (const SolverError& e) {
    log << "error: " << e.what() << '\n';
    return kExitSolver;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace sgfem
