#pragma once

#include "isomon/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace isomon::cli {

enum ExitCode : int { pass = 0, identity_failure = 1, usage_error = 2, numeric_abort = 3 };

struct RunConfig {
  int r_inf = 4;
  std::optional<RVec> tau;    // canonical slice when set or when times is empty
  std::optional<RVec> times;  // t_1..t_{2r-2}
  std::optional<RVec> q, p;   // drawn from the seed when absent
  Rational hbar = 1;
  int order = 0;  // doubled series order, 0 picks the default
  std::uint64_t seed = 1;

  std::vector<std::string> suites;
  std::vector<int> r_values{4, 5, 6};
  int samples = 20;
  bool perturb = false;

  int steps = 1000;
  double step_size = 1e-3;
  int direction = 1;
  int every = 50;
};

struct Outcome {
  nlohmann::json report;
  int exit = pass;
};

nlohmann::json config_json(const RunConfig& c, const std::string& command);

Outcome cmd_hamiltonian(const RunConfig& c);
Outcome cmd_verify(const RunConfig& c);
Outcome cmd_correspond(const RunConfig& c);
Outcome cmd_flow_demo(const RunConfig& c);

// maps library exceptions to an exit code and a structured error object
Outcome error_outcome(const std::exception& e);

}  // namespace isomon::cli
