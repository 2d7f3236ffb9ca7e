#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace isomon {

enum class Suite { gauge, zero_curvature, reduction, correspondence };

std::string to_string(Suite s);
// "gauge", "zero-curvature", "reduction", "correspondence"; InvalidInput otherwise
Suite parse_suite(const std::string& name);
std::vector<Suite> all_suites();

struct SuiteOptions {
  std::vector<int> r_values{4, 5, 6};
  int samples = 20;
  std::uint64_t seed = 1;
  // add 1/7 to one coefficient of every fixture before the identity is checked
  bool perturb = false;
};

// one identity at one r_inf, over all samples; detail names the first failing sample
struct IdentityCheck {
  std::string identity;
  int r_inf = 0;
  int samples = 0;
  bool ok = true;
  std::string detail;
};

struct SuiteReport {
  Suite suite = Suite::gauge;
  std::vector<IdentityCheck> checks;
  bool ok() const;
};

// every r_inf runs on its own thread; checks come back ordered by r_inf, then identity
SuiteReport run_suite(Suite suite, const SuiteOptions& options);

}  // namespace isomon
