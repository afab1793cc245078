#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blocklie/io.hpp"

namespace blocklie::acceptance {

struct Config {
  std::uint64_t seed = 0;
  /// Fixture: shifts Lambda_1 of the t+1 witness so its singular vector breaks.
  bool perturb_labels = false;
};

struct CheckResult {
  std::string name;
  std::string description;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Names of all checks in run order.
const std::vector<std::string>& check_names();

/// Throws std::invalid_argument for an unknown name. Each check seeds its own
/// generator from (seed, name), so running one check alone reproduces its part of
/// a full run.
CheckResult run_check(const std::string& name, const Config& config);

/// Runs `only` (or everything when empty) in catalogue order.
std::vector<CheckResult> run_suite(const Config& config, const std::vector<std::string>& only = {});

std::string render_table(const std::vector<CheckResult>& results, bool with_timings = true);
/// Timings are left out so that equal configurations give identical JSON.
Json to_json(const std::vector<CheckResult>& results, const Config& config);

}  // namespace blocklie::acceptance
