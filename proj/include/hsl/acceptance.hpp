#pragma once

#include <string>
#include <vector>

namespace hsl {

struct CheckResult {
  std::string name;
  double value = 0;   // measured value or residual
  double target = 0;  // expected value (0 for pure residual checks)
  double tol = 0;
  bool pass = false;
};

// Suites: "disk", "identities", "variation", "all".
std::vector<CheckResult> run_acceptance(const std::string& suite);

bool all_passed(const std::vector<CheckResult>& results);
std::string format_results(const std::vector<CheckResult>& results);

}  // namespace hsl
