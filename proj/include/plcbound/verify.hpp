#pragma once

// Reproduction checks for the q_{s,t} bound: closed-form values, the 6/7
// sandwich, the ratio infimum, exact small-graph oracles and the
// derandomized scheme. Shared by `plcbound verify-paper` and the Python
// module.

#include "plcbound/exact.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace plcbound {

struct Check {
  /// Stable identifier, e.g. "q32-golden-ratio".
  std::string id;
  std::string label;
  std::string expected;
  std::string observed;
  bool pass = false;
  double seconds = 0.0;
};

struct ReproductionOptions {
  /// Fewer random list assignments in the scheme check (still >= 100 per family).
  bool quick = false;
  /// Added to every q before it is compared; negative control for the harness.
  double q_perturbation = 0.0;
  std::uint64_t node_budget = kDefaultNodeBudget;
};

std::vector<Check> run_reproduction_checks(const ReproductionOptions& options = {});

/// Shortest round-trip decimal for reports.
std::string format_double(double x, int precision = 12);

}  // namespace plcbound
