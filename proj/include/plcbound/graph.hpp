#pragma once

// Graph, list assignment and partial coloring data model.
//
// Vertices are 0-based inside the library. Every external format (DIMACS,
// the JSON list and coloring files, CLI output) uses 1-based vertex ids.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace plcbound {

using Color = int;
using Edge = std::pair<int, int>;

/// Simple undirected graph. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  /// Builds the graph on vertices 0..n-1. Duplicate edges collapse;
  /// loops and out-of-range endpoints throw InvalidParameters.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t size() const noexcept { return edge_count_; }

  /// Sorted neighbor list.
  const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  int max_degree() const;
  bool adjacent(int u, int v) const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Subgraph induced on the listed vertices, relabeled in the given order.
  Graph induced(std::span<const int> vertices) const;

 private:
  std::vector<std::vector<int>> adj_;
  std::size_t edge_count_ = 0;
};

enum class Family { Empty, Path, Cycle, Complete, CompleteBipartite, Petersen };

/// Accepts "empty", "path", "cycle", "complete", "complete_bipartite", "petersen".
Family parse_family(const std::string& name);
std::string family_name(Family family);

/// Canonically labeled member of a family. size2 is the second side for
/// complete_bipartite (defaults to size); the Petersen graph ignores both.
Graph generate(Family family, int size, int size2 = -1);

/// Mapping vertex -> non-empty set of non-negative colors, each stored sorted.
class ListAssignment {
 public:
  ListAssignment() = default;
  /// Sorts every list. Throws InvalidParameters on empty lists, duplicate
  /// colors within a list or negative colors.
  explicit ListAssignment(std::vector<std::vector<Color>> lists);

  /// The same list on all n vertices.
  static ListAssignment uniform(int n, std::vector<Color> list);

  int vertex_count() const noexcept { return static_cast<int>(lists_.size()); }
  std::span<const Color> list(int v) const { return lists_.at(static_cast<std::size_t>(v)); }
  const std::vector<std::vector<Color>>& lists() const noexcept { return lists_; }
  bool contains(int v, Color c) const;

  /// t if every list has exactly t colors.
  std::optional<int> uniform_size() const;
  /// Sorted union of all lists (R).
  std::vector<Color> color_union() const;

  friend bool operator==(const ListAssignment&, const ListAssignment&) = default;

 private:
  std::vector<std::vector<Color>> lists_;
};

/// Each vertex has t distinct colors drawn uniformly from 1..palette.
ListAssignment random_lists(int n, int t, int palette, std::uint64_t seed);

/// Vertex -> color or uncolored.
class PartialColoring {
 public:
  PartialColoring() = default;
  explicit PartialColoring(int n) : colors_(static_cast<std::size_t>(n)) {}

  int vertex_count() const noexcept { return static_cast<int>(colors_.size()); }
  std::optional<Color> get(int v) const { return colors_.at(static_cast<std::size_t>(v)); }
  bool is_colored(int v) const { return get(v).has_value(); }
  void set(int v, Color c) { colors_.at(static_cast<std::size_t>(v)) = c; }
  void clear(int v) { colors_.at(static_cast<std::size_t>(v)).reset(); }
  int colored_count() const;

  friend bool operator==(const PartialColoring&, const PartialColoring&) = default;

 private:
  std::vector<std::optional<Color>> colors_;
};

struct Violation {
  enum class Kind {
    /// Both endpoints of an edge carry the same color.
    Edge,
    /// A vertex carries a color outside its list.
    List,
    /// Coloring or lists do not cover the graph's vertices.
    Size,
  };
  Kind kind;
  int u = -1;
  int v = -1;
  Color color = -1;

  std::string describe() const;
};

struct ValidationResult {
  int colored_count = 0;
  bool ok = true;
  std::vector<Violation> violations;
};

/// Checks properness on colored vertices and list membership. Never throws
/// for invalid colorings; problems are returned as violations.
ValidationResult validate_partial(const Graph& g, const ListAssignment& lists,
                                  const PartialColoring& coloring);

struct DegeneracyOrder {
  /// Vertices in removal order (repeatedly remove a minimum degree vertex).
  std::vector<int> removal_order;
  int degeneracy = 0;
};

DegeneracyOrder degeneracy_order(const Graph& g);

/// degeneracy + 1. Greedy coloring in reverse removal order succeeds from any
/// lists of this size, so g is s-choosable for every s >= degeneracy_bound(g).
int degeneracy_bound(const Graph& g);

}  // namespace plcbound
