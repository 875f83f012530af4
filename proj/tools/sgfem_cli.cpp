#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sgfem/harness.hpp"

namespace {

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad number '" + item + "'");
    out.push_back(v);
  }
  return out;
}

void add_common(CLI::App* cmd, std::string& element, std::string& example, std::string& iotas,
                sgfem::RunConfig& cfg, std::string& morley_norm) {
  cmd->add_option("--element", element, "ntw, specht or morley")->capture_default_str();
  cmd->add_option("--example", example, "smooth or layer")->capture_default_str();
  cmd->add_option("--iota", iotas, "comma-separated iota values in (0, 1]")->capture_default_str();
  cmd->add_option("--levels", cfg.levels, "number of meshes (base mesh refined levels-1 times)")
      ->capture_default_str();
  cmd->add_option("--mesh", cfg.mesh, "structured:N or file:PATH")->capture_default_str();
  cmd->add_option("--lambda", cfg.lambda, "Lame constant lambda")->capture_default_str();
  cmd->add_option("--mu", cfg.mu, "Lame constant mu")->capture_default_str();
  cmd->add_option("--morley-norm", morley_norm, "error norm for Morley: broken or pi1")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strain-gradient elasticity FEM: convergence studies and verification"};
  app.require_subcommand(1);

  sgfem::RunConfig cfg;
  std::string element = "ntw", example = "smooth", iotas = "1,1e-2,1e-4,1e-6", morley_norm = "broken";
  std::string suite = "all";
  std::vector<std::string> probes;

  auto* conv = app.add_subcommand("convergence", "run a convergence study and print the rate table");
  add_common(conv, element, example, iotas, cfg, morley_norm);
  conv->add_option("--out", cfg.out, "output file (default: standard output)");
  conv->add_option("--format", cfg.format, "csv or markdown")->capture_default_str();

  auto* ver = app.add_subcommand("verify", "run an invariant suite");
  ver->add_option("suite", suite, "quadrature, korn, elements, coercivity, jumps, manufactured or all")
      ->capture_default_str();

  auto* sol = app.add_subcommand("solve", "solve once and probe the discrete solution");
  add_common(sol, element, example, iotas, cfg, morley_norm);
  sol->add_option("--probe", probes, "probe point x,y (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? sgfem::kExitOk : sgfem::kExitValidation;
  }

  if (ver->parsed()) return sgfem::cmd_verify(suite, std::cout);

  std::vector<sgfem::Vec2> points;
  try {
    cfg.kind = sgfem::parse_element_kind(element);
    cfg.example = example;
    cfg.iotas = parse_list(sol->parsed() && sol->count("--iota") == 0 ? std::string("1") : iotas);
    if (morley_norm == "pi1") cfg.norm = sgfem::ErrorNorm::MorleyPi1;
    else if (morley_norm != "broken") throw std::invalid_argument("--morley-norm must be broken or pi1");
    for (const auto& p : probes) {
      const auto xy = parse_list(p);
      if (xy.size() != 2) throw std::invalid_argument("probe '" + p + "' must be x,y");
      points.emplace_back(xy[0], xy[1]);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return sgfem::kExitValidation;
  }

  if (conv->parsed()) return sgfem::cmd_convergence(cfg, std::cout, std::cerr);
  if (cfg.iotas.size() != 1) {
    std::cerr << "error: solve takes a single --iota value\n";
    return sgfem::kExitValidation;
  }
  return sgfem::cmd_solve(cfg, points, std::cout, std::cerr);
}
