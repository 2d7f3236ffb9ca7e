#include "commands.hpp"
#include "isomon/errors.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace isomon;
using namespace isomon::cli;

namespace {

struct RawOptions {
  std::vector<int> r_inf{4};
  std::vector<std::string> tau, times, q, p;
  std::string hbar = "1";
  bool pretty = false;
};

std::optional<RVec> list_or_empty(const std::vector<std::string>& items, const CLI::App& app, const std::string& name) {
  if (app.count(name) == 0) return std::nullopt;
  RVec out;
  for (const auto& s : items) out.push_back(parse_rational(s));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact isomonodromic and isospectral computations for twisted rank 2 connections"};
  app.set_version_flag("--version", std::string(ISOMON_VERSION));
  app.set_config("--config", "", "flat key = value file; flags given on the command line win");
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  RawOptions raw;
  app.add_option("--r-inf", raw.r_inf, "pole order at infinity; verify accepts a comma separated list")
      ->delimiter(',');
  app.add_option("--tau", raw.tau, "isomonodromic times tau_1..tau_g, comma separated rationals")->delimiter(',');
  app.add_option("--times", raw.times, "explicit times t_1..t_{2r-2}, comma separated rationals")->delimiter(',');
  app.add_option("--q", raw.q, "apparent singularities q_1..q_g")->delimiter(',');
  app.add_option("--p", raw.p, "dual coordinates p_1..p_g")->delimiter(',');
  app.add_option("--hbar", raw.hbar, "hbar, a rational");
  app.add_option("--order", cfg.order, "doubled truncation order of the eigenvalue series, 0 for the default");
  app.add_option("--seed", cfg.seed, "seed for randomized data");
  app.add_flag("--json", "compact JSON output (default)");
  app.add_flag("--pretty", raw.pretty, "indented JSON output");

  auto* ham = app.add_subcommand("hamiltonian", "oper coefficients and reduced Hamiltonians");
  auto* verify = app.add_subcommand("verify", "run exact identity suites");
  verify->add_option("--suite", cfg.suites, "gauge, zero-curvature, reduction, correspondence or all")->delimiter(',');
  verify->add_option("--samples", cfg.samples, "random fixtures per r_inf");
  verify->add_flag("--perturb", cfg.perturb, "inject a single coefficient perturbation into every fixture");
  auto* correspond = app.add_subcommand("correspond", "chart chain (q,p) -> (Q,P) -> (Q,R) -> (u,v)");
  auto* flow = app.add_subcommand("flow-demo", "RK4 integration of a reduced flow, floating point");
  flow->add_option("--steps", cfg.steps, "number of RK4 steps");
  flow->add_option("--step-size", cfg.step_size, "RK4 step size");
  flow->add_option("--direction", cfg.direction, "index j of the flow d/dtau_j");
  flow->add_option("--every", cfg.every, "record every n-th step");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? pass : usage_error;
  }

  Outcome outcome;
  try {
    if (raw.r_inf.empty()) throw InvalidInput("--r-inf needs a value");
    cfg.r_inf = raw.r_inf.front();
    if (verify->parsed()) {
      if (app.count("--r-inf") > 0) cfg.r_values = raw.r_inf;
    } else if (raw.r_inf.size() != 1) {
      throw InvalidInput("--r-inf takes a single value here");
    }
    cfg.tau = list_or_empty(raw.tau, app, "--tau");
    cfg.times = list_or_empty(raw.times, app, "--times");
    cfg.q = list_or_empty(raw.q, app, "--q");
    cfg.p = list_or_empty(raw.p, app, "--p");
    cfg.hbar = parse_rational(raw.hbar);
    if (ham->parsed()) outcome = cmd_hamiltonian(cfg);
    else if (verify->parsed()) outcome = cmd_verify(cfg);
    else if (correspond->parsed()) outcome = cmd_correspond(cfg);
    else if (flow->parsed()) outcome = cmd_flow_demo(cfg);
  } catch (const std::exception& e) {
    outcome = error_outcome(e);
    std::cerr << outcome.report.dump() << "\n";
    return outcome.exit;
  }
  std::cout << outcome.report.dump(raw.pretty ? 2 : -1) << "\n";
  return outcome.exit;
}
