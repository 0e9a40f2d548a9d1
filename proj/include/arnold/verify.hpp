#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace arnold {

struct VerifyOptions {
  enum class Level { quick, full };
  Level level = Level::quick;
  uint64_t seed = 1;
  /// Self-test hook: perturbs one oracle comparison so the harness can prove
  /// that failures surface with a witness and a nonzero exit.
  bool inject_fault = false;
};

struct PropertyResult {
  std::string name;
  bool pass = true;
  std::string details;
};

struct VerifyReport {
  std::vector<PropertyResult> properties;
  std::vector<std::string> notes;

  bool all_pass() const {
    for (const auto& p : properties) {
      if (!p.pass) return false;
    }
    return true;
  }
};

/// Runs the full property battery deterministically under the given seed.
/// quick: exhaustive n <= 3, sampled n <= 8. full: exhaustive n <= 4,
/// sampled n <= 12, planner oracle sweep n <= 14.
VerifyReport run_verification(const VerifyOptions& opts);

}  // namespace arnold
