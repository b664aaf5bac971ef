#pragma once

// The random partition scheme behind lambda_t >= q_{s,t} n, and its
// derandomization by conditional expectations.
//
// Every t-list is extended by u = s - t fresh colors pi_1..pi_u. An s-list
// coloring phi of the extended lists splits the vertices into the independent
// sets I_i = phi^-1(pi_i) and the core H colored from R, the union of the
// original lists. R is then split into classes R_0..R_u, a color landing in
// R_0 with probability q and in each R_i with probability (1 - q)/u.
//
//   H vertex:   keeps phi(v) when phi(v) is in R_0
//   I_i vertex: takes the smallest color of its list that lies in R_i
//
// With q = q_{s,t}, every vertex ends up colored with probability exactly q.

#include "plcbound/exact.hpp"
#include "plcbound/graph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace plcbound {

struct SchemeState {
  int s = 0;
  int t = 0;
  int u = 0;
  ListAssignment lists;
  /// Total coloring from the augmented lists.
  std::vector<Color> phi;
  /// pi_1..pi_u = max(R)+1 .. max(R)+u
  std::vector<Color> pi_colors;
  /// independent_sets[i-1] = I_i
  std::vector<std::vector<int>> independent_sets;
  /// H, ascending.
  std::vector<int> core;
  /// 0 for vertices of H, i for vertices of I_i.
  std::vector<int> part_of;
  /// R, ascending.
  std::vector<Color> palette;

  /// Position of c in `palette`, or -1.
  int palette_index(Color c) const;
};

/// Class (0..u) of every color of R, aligned with SchemeState::palette.
struct ColorPartition {
  std::vector<int> class_of;
};

/// Requires s > t > 0 and lists of uniform size t (InvalidParameters
/// otherwise). phi is the first coloring found by backtracking in smallest-last
/// order; throws SchemeInapplicable when the augmented lists admit none.
SchemeState build_scheme(const Graph& g, const ListAssignment& lists, int s,
                         std::uint64_t node_budget = kDefaultNodeBudget);

/// Colors of R drawn in ascending order from a generator seeded with `seed`.
ColorPartition random_partition(const SchemeState& state, double q, std::uint64_t seed);

PartialColoring color_from_partition(const SchemeState& state, const ColorPartition& partition);

/// Expected number of colored vertices when the colors with class_of >= 0 are
/// fixed and the rest (class_of == -1) are still random.
double conditional_expectation(const SchemeState& state, double q, std::span<const int> class_of);

struct MonteCarloResult {
  double q = 0.0;
  int trials = 0;
  double mean_fraction = 0.0;
  /// Sample standard deviation of the per-trial colored fraction.
  double stddev = 0.0;
  double stddev_of_mean = 0.0;
};

/// Trial k uses seed + k.
MonteCarloResult monte_carlo(const Graph& g, const ListAssignment& lists, int s, int trials,
                             std::uint64_t seed, std::uint64_t node_budget = kDefaultNodeBudget);

struct DerandomizationStep {
  Color color;
  int chosen_class;
  double expectation_before;
  double expectation_after;
};

struct SchemeOutcome {
  PartialColoring coloring;
  int colored_count = 0;
  /// q n at the start, computed from the scheme rather than assumed.
  double expected_count = 0.0;
  double q_used = 0.0;
  std::optional<std::uint64_t> seed;
  /// ceil(q n - 1e-6)
  int guaranteed_count = 0;
  std::vector<DerandomizationStep> trace;

  bool guarantee_met() const noexcept { return colored_count >= guaranteed_count; }
  /// No step lowered the conditional expectation by more than 1e-12.
  bool expectation_monotone() const noexcept;
};

inline constexpr double kGuaranteeSlack = 1e-6;
inline constexpr double kStepSlack = 1e-12;

/// Fixes the colors of R one at a time, ascending, into the class with the
/// largest conditional expectation (ties go to R_0, then the lowest index).
SchemeOutcome derandomize(const Graph& g, const ListAssignment& lists, int s,
                          std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace plcbound
