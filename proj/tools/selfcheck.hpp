#pragma once

#include <string>
#include <vector>

namespace orbitcodes::cli {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Reference battery: every worked example from the construction's source
/// material, recomputed from scratch.
std::vector<CheckResult> run_selfcheck();

}  // namespace orbitcodes::cli
