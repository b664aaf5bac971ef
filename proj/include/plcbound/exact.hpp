#pragma once

// Exhaustive solvers for small instances: list coloring existence, maximum
// partial list coloring, s-choosability, the list chromatic number and
// lambda_t, the minimum over t-list assignments of the maximum number of
// colorable vertices.
//
// List assignments are enumerated up to color renaming. Vertices are scanned
// in index order and a vertex's sorted list may only introduce unused colors
// as the next consecutive labels (restricted growth). Every assignment is a
// renaming of at least one enumerated assignment. Colors are labeled from 1.
//
// A graph on n vertices with lists of size s uses at most n*s distinct
// colors, so the default palette cap n*s loses nothing.

#include "plcbound/graph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace plcbound {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

/// Environment variable that overrides kDefaultNodeBudget in the CLI.
inline constexpr const char* kNodeBudgetEnv = "PLCBOUND_NODE_BUDGET";

struct ColoringSearch {
  /// Vertex visiting order; empty means index order.
  std::vector<int> order;
  std::uint64_t node_budget = kDefaultNodeBudget;
};

/// Backtracking over vertices in the given order, colors ascending. Returns the
/// first total proper list coloring, or nullopt if none exists. Throws
/// ResourceExhausted when the budget runs out.
std::optional<PartialColoring> find_list_coloring(const Graph& g, const ListAssignment& lists,
                                                  const ColoringSearch& search = {});

struct MaxPartialResult {
  int count = 0;
  PartialColoring coloring;
};

/// Branch and bound over per-vertex choices (list colors ascending, then
/// uncolored). Returns the lexicographically first optimal coloring.
MaxPartialResult max_partial_colorable(const Graph& g, const ListAssignment& lists,
                                       std::uint64_t node_budget = kDefaultNodeBudget);

/// Smallest k with a proper k-coloring.
int chromatic_number(const Graph& g, std::uint64_t node_budget = kDefaultNodeBudget);

enum class Visit { Descend, Prune, Stop };

/// Called once per canonical prefix (lists of vertices 0..k-1, k = 1..n).
using PrefixVisitor = std::function<Visit(std::span<const std::vector<Color>> prefix)>;

/// Depth-first restricted-growth enumeration of t-list assignments on n
/// vertices using colors 1..palette_cap. Returns the number of complete
/// assignments visited.
std::uint64_t visit_canonical_assignments(int n, int t, int palette_cap,
                                          const PrefixVisitor& visit);

struct EnumerationOptions {
  /// 0 selects n * (list size).
  int palette_cap = 0;
  std::uint64_t node_budget = kDefaultNodeBudget;
  /// Decide s >= degeneracy_bound (greedy) and s < chromatic number
  /// (identical lists) without enumerating.
  bool use_shortcuts = true;
};

struct ChoosabilityResult {
  bool ok = false;
  /// First uncolorable assignment in enumeration order.
  std::optional<ListAssignment> bad;
  std::uint64_t assignments_checked = 0;
  /// "enumeration", "degeneracy" or "chromatic".
  std::string method;
};

/// An uncolorable prefix already makes the whole assignment uncolorable, so
/// enumeration stops at the first one and extends it with the list {1..s}.
ChoosabilityResult is_s_choosable(const Graph& g, int s, const EnumerationOptions& options = {});

struct ChiResult {
  int chi_ell = 0;
  int chi = 0;
  /// An assignment of (chi_ell - 1)-lists with no list coloring.
  std::optional<ListAssignment> bad_assignment;
};

ChiResult chi_ell(const Graph& g, const EnumerationOptions& options = {});

struct LambdaResult {
  int value = 0;
  ListAssignment witness_assignment;
  PartialColoring witness_coloring;
  std::uint64_t assignments_checked = 0;
};

/// Exact lambda_t. A coloring of a prefix is a partial coloring of the whole
/// graph, so prefixes whose maximum already reaches the best complete value
/// are pruned.
LambdaResult lambda_t(const Graph& g, int t, const EnumerationOptions& options = {});

}  // namespace plcbound
