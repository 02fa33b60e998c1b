#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace hstool {

struct VerifyConfig {
  std::vector<int> n_values = {1, 2};
  std::vector<double> beta_values = {1.0, 2.0};
  int resolution = 256;
  int corpus_size = 20;
  unsigned long seed = 42;
  std::string only;        // substring filter on check names
  bool inject_bug = false; // scale one quadrature weight by 1.01
};

struct CheckResult {
  std::string name;
  bool pass = false;
  double value = 0.0;  // measured gap/margin, meaning depends on the check
  double tol = 0.0;
  std::string detail;
};

// The full verification suite.  Every check is deterministic for a fixed
// config.
std::vector<CheckResult> run_verify(const VerifyConfig& config);

nlohmann::json to_json(const std::vector<CheckResult>& results);

}  // namespace hstool
