#include <cmath>
#include <cstdlib>
#include <limits>
#include <random>
#include <sstream>

#include "doctest.h"
#include "sgfem/harness.hpp"

using namespace sgfem;

namespace {

ConvergenceReport sample_report(double iota) {
  ConvergenceReport r;
  r.kind = ElementKind::Specht;
  r.example = "layer";
  r.iota = iota;
  r.mesh = "structured:8";
  const auto rates = convergence_rates({0.3, 0.1 / 3, 1.0 / 70});
  for (int l = 0; l < 3; ++l) {
    ConvergenceRow row;
    row.level = l;
    row.h = std::sqrt(2.0) / (8 << l);
    row.dofs = 100 * (l + 1) + 7;
    row.energy_err = 0.1 / (l + 1.0) / 3.0;
    row.rel_energy_err = std::ldexp(0.3, -l) + 1e-17;
    row.rate = rates[l];
    r.rows.push_back(row);
  }
  return r;
}

}  // namespace

TEST_CASE("format_double round trips") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> uni(-30, 30);
  for (int i = 0; i < 1000; ++i) {
    const double x = std::pow(10.0, uni(rng)) * (i % 2 ? 1 : -1);
    CHECK(std::stod(format_double(x)) == x);
  }
  CHECK(format_double(0.5) == "0.5");
  const double tiny = std::numeric_limits<double>::denorm_min();
  CHECK(std::strtod(format_double(tiny).c_str(), nullptr) == tiny);
}

TEST_CASE("CSV round trip") {
  const std::vector<ConvergenceReport> in{sample_report(1.0), sample_report(1e-6)};
  const std::string csv = to_csv(in);
  CHECK(csv.rfind("element,example,iota,level,h,dofs,energy_err,rel_energy_err,rate\n", 0) == 0);
  std::istringstream s(csv);
  const auto out = parse_csv(s);
  REQUIRE(out.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(out[i].kind == in[i].kind);
    CHECK(out[i].example == in[i].example);
    CHECK(out[i].iota == in[i].iota);
    REQUIRE(out[i].rows.size() == in[i].rows.size());
    for (std::size_t l = 0; l < in[i].rows.size(); ++l) {
      const auto &a = in[i].rows[l], &b = out[i].rows[l];
      CHECK(a.level == b.level);
      CHECK(a.h == b.h);
      CHECK(a.dofs == b.dofs);
      CHECK(a.energy_err == b.energy_err);
      CHECK(a.rel_energy_err == b.rel_energy_err);
      CHECK(a.rate.has_value() == b.rate.has_value());
      if (a.rate) CHECK(*a.rate == *b.rate);
    }
  }
  std::istringstream bad_header("element,iota\n");
  CHECK_THROWS_AS(parse_csv(bad_header), std::invalid_argument);
  std::istringstream bad_field(csv + "specht,layer,1,0,abc,1,1,1,\n");
  CHECK_THROWS_AS(parse_csv(bad_field), std::invalid_argument);
}

TEST_CASE("markdown table") {
  const std::string md = to_markdown({sample_report(1.0), sample_report(1e-4)});
  CHECK(md.find("### specht, layer example") != std::string::npos);
  CHECK(md.find("| 1e+0 |") != std::string::npos);
  CHECK(md.find("| 1e-4 |") != std::string::npos);
  CHECK(md.find("| rate |") != std::string::npos);
}

TEST_CASE("run configuration validation") {
  RunConfig c;
  CHECK_NOTHROW(c.validate());
  c.iotas = {2.0};
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = RunConfig{};
  c.iotas = {};
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = RunConfig{};
  c.levels = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = RunConfig{};
  c.mu = -1;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = RunConfig{};
  c.example = "wave";
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = RunConfig{};
  c.format = "json";
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);

  CHECK(mesh_from_source("structured:3").num_triangles() == 18);
  CHECK_THROWS_AS(mesh_from_source("structured:x"), std::invalid_argument);
  CHECK_THROWS_AS(mesh_from_source("circle:4"), std::invalid_argument);
  CHECK_THROWS(mesh_from_source("file:/nonexistent/mesh.txt"));
}

TEST_CASE("convergence command") {
  RunConfig c;
  c.kind = ElementKind::Morley;
  c.iotas = {1.0};
  c.levels = 1;
  c.mesh = "structured:4";
  std::ostringstream out, log;
  CHECK(cmd_convergence(c, out, log) == kExitOk);
  std::istringstream in(out.str());
  const auto reports = parse_csv(in);
  REQUIRE(reports.size() == 1);
  REQUIRE(reports[0].rows.size() == 1);
  CHECK(!reports[0].rows[0].rate);
  CHECK(out.str().find("morley,smooth,1,0,") != std::string::npos);

  c.iotas = {0.0};
  std::ostringstream out2, log2;
  CHECK(cmd_convergence(c, out2, log2) == kExitValidation);
  CHECK(log2.str().find("iota") != std::string::npos);
}

TEST_CASE("verify command") {
  std::ostringstream out;
  CHECK(cmd_verify("korn", out) == kExitOk);
  CHECK(out.str().find("0.292893") != std::string::npos);
  CHECK(out.str().find("PASS") != std::string::npos);

  std::ostringstream unknown;
  CHECK(cmd_verify("nonsense", unknown) == kExitValidation);

  TriangleRule broken = volume_rule();
  broken.weights[0] = -broken.weights[0];
  VerifyOptions opts;
  opts.rule = &broken;
  std::ostringstream bad;
  CHECK(cmd_verify("quadrature", bad, opts) == kExitVerification);
  CHECK(bad.str().find("FAIL") != std::string::npos);

  std::ostringstream good;
  CHECK(cmd_verify("quadrature", good) == kExitOk);
}

TEST_CASE("solve command") {
  RunConfig c;
  c.kind = ElementKind::NTW;
  c.iotas = {1.0};
  c.mesh = "structured:8";
  c.levels = 3;
  std::ostringstream out, log;
  REQUIRE(cmd_solve(c, {Vec2(0.0, 0.4), Vec2(0.5, 0.5)}, out, log) == kExitOk);
  const std::string text = out.str();
  const auto header = text.find("x,y,uh1,uh2,u1,u2\n");
  REQUIRE(header != std::string::npos);
  std::istringstream rows(text.substr(header + 18));
  std::string line;
  std::vector<std::vector<double>> values;
  while (std::getline(rows, line)) {
    std::vector<double> v;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) v.push_back(std::stod(cell));
    values.push_back(v);
  }
  REQUIRE(values.size() == 2);
  CHECK(values[0][2] == 0.0);
  CHECK(values[0][3] == 0.0);
  CHECK(values[1][2] == doctest::Approx(values[1][4]).epsilon(2e-2));
  CHECK(std::abs(values[1][3] - values[1][5]) <= 2e-2);

  std::ostringstream out2, log2;
  CHECK(cmd_solve(c, {Vec2(2.0, 2.0)}, out2, log2) == kExitValidation);
}
