#include "plcbound/graph.hpp"

#include "plcbound/errors.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace plcbound {

Graph::Graph(int n, std::span<const Edge> edges) {
  if (n < 0) throw InvalidParameters("graph order must be non-negative");
  adj_.resize(static_cast<std::size_t>(n));
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InvalidParameters("edge endpoint out of range");
    }
    if (u == v) throw InvalidParameters("loop at vertex " + std::to_string(u + 1));
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  edge_count_ = 0;
  for (auto& nbrs : adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    edge_count_ += nbrs.size();
  }
  edge_count_ /= 2;
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& nbrs : adj_) best = std::max(best, static_cast<int>(nbrs.size()));
  return best;
}

bool Graph::adjacent(int u, int v) const {
  const auto& nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < order(); ++u) {
    for (int v : adj_[static_cast<std::size_t>(u)]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced(std::span<const int> vertices) const {
  std::vector<int> position(adj_.size(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) position.at(static_cast<std::size_t>(vertices[i])) = static_cast<int>(i);
  std::vector<Edge> sub;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (int w : neighbors(vertices[i])) {
      const int j = position[static_cast<std::size_t>(w)];
      if (j > static_cast<int>(i)) sub.emplace_back(static_cast<int>(i), j);
    }
  }
  return Graph(static_cast<int>(vertices.size()), sub);
}

// ---------------------------------------------------------------------------
// Families

Family parse_family(const std::string& name) {
  if (name == "empty" || name == "edgeless") return Family::Empty;
  if (name == "path") return Family::Path;
  if (name == "cycle") return Family::Cycle;
  if (name == "complete") return Family::Complete;
  if (name == "complete_bipartite" || name == "bipartite") return Family::CompleteBipartite;
  if (name == "petersen") return Family::Petersen;
  throw InvalidParameters("unknown graph family '" + name + "'");
}

std::string family_name(Family family) {
  switch (family) {
    case Family::Empty: return "empty";
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Complete: return "complete";
    case Family::CompleteBipartite: return "complete_bipartite";
    case Family::Petersen: return "petersen";
  }
  return "unknown";
}

Graph generate(Family family, int size, int size2) {
  std::vector<Edge> edges;
  switch (family) {
    case Family::Empty:
      if (size < 0) throw InvalidParameters("empty graph needs size >= 0");
      return Graph(size, edges);
    case Family::Path:
      if (size < 1) throw InvalidParameters("path needs size >= 1");
      for (int i = 0; i + 1 < size; ++i) edges.emplace_back(i, i + 1);
      return Graph(size, edges);
    case Family::Cycle:
      if (size < 3) throw InvalidParameters("cycle needs size >= 3");
      for (int i = 0; i < size; ++i) edges.emplace_back(i, (i + 1) % size);
      return Graph(size, edges);
    case Family::Complete:
      if (size < 1) throw InvalidParameters("complete graph needs size >= 1");
      for (int i = 0; i < size; ++i) {
        for (int j = i + 1; j < size; ++j) edges.emplace_back(i, j);
      }
      return Graph(size, edges);
    case Family::CompleteBipartite: {
      const int a = size;
      const int b = size2 < 0 ? size : size2;
      if (a < 1 || b < 1) throw InvalidParameters("complete_bipartite needs both sides >= 1");
      for (int i = 0; i < a; ++i) {
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
      }
      return Graph(a + b, edges);
    }
    case Family::Petersen: {
      // Kneser graph K(5,2): 2-subsets of {0..4}, adjacent when disjoint.
      std::vector<std::pair<int, int>> pairs;
      for (int i = 0; i < 5; ++i) {
        for (int j = i + 1; j < 5; ++j) pairs.emplace_back(i, j);
      }
      for (std::size_t x = 0; x < pairs.size(); ++x) {
        for (std::size_t y = x + 1; y < pairs.size(); ++y) {
          const auto [a, b] = pairs[x];
          const auto [c, d] = pairs[y];
          if (a != c && a != d && b != c && b != d) {
            edges.emplace_back(static_cast<int>(x), static_cast<int>(y));
          }
        }
      }
      return Graph(static_cast<int>(pairs.size()), edges);
    }
  }
  throw InvalidParameters("unknown graph family");
}

// ---------------------------------------------------------------------------
// Lists and colorings

ListAssignment::ListAssignment(std::vector<std::vector<Color>> lists) : lists_(std::move(lists)) {
  for (std::size_t v = 0; v < lists_.size(); ++v) {
    auto& list = lists_[v];
    if (list.empty()) {
      throw InvalidParameters("empty list at vertex " + std::to_string(v + 1));
    }
    std::sort(list.begin(), list.end());
    if (list.front() < 0) {
      throw InvalidParameters("negative color at vertex " + std::to_string(v + 1));
    }
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw InvalidParameters("duplicate color in list of vertex " + std::to_string(v + 1));
    }
  }
}

ListAssignment ListAssignment::uniform(int n, std::vector<Color> list) {
  return ListAssignment(std::vector<std::vector<Color>>(static_cast<std::size_t>(n), list));
}

bool ListAssignment::contains(int v, Color c) const {
  const auto l = list(v);
  return std::binary_search(l.begin(), l.end(), c);
}

std::optional<int> ListAssignment::uniform_size() const {
  if (lists_.empty()) return std::nullopt;
  const std::size_t t = lists_.front().size();
  for (const auto& l : lists_) {
    if (l.size() != t) return std::nullopt;
  }
  return static_cast<int>(t);
}

std::vector<Color> ListAssignment::color_union() const {
  std::vector<Color> out;
  for (const auto& l : lists_) out.insert(out.end(), l.begin(), l.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ListAssignment random_lists(int n, int t, int palette, std::uint64_t seed) {
  if (n < 0 || t < 1 || palette < t) {
    throw InvalidParameters("random_lists: need t >= 1 and palette >= t");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Color> pick(1, palette);
  std::vector<std::vector<Color>> lists(static_cast<std::size_t>(n));
  for (auto& list : lists) {
    std::set<Color> chosen;
    while (static_cast<int>(chosen.size()) < t) chosen.insert(pick(rng));
    list.assign(chosen.begin(), chosen.end());
  }
  return ListAssignment(std::move(lists));
}

int PartialColoring::colored_count() const {
  return static_cast<int>(std::count_if(colors_.begin(), colors_.end(),
                                        [](const auto& c) { return c.has_value(); }));
}

std::string Violation::describe() const {
  switch (kind) {
    case Kind::Edge:
      return "edge " + std::to_string(u + 1) + "-" + std::to_string(v + 1) +
             " has both ends colored " + std::to_string(color);
    case Kind::List:
      return "vertex " + std::to_string(u + 1) + " colored " + std::to_string(color) +
             " which is not in its list";
    case Kind::Size:
      return "coloring or lists do not match the graph order";
  }
  return "unknown violation";
}

ValidationResult validate_partial(const Graph& g, const ListAssignment& lists,
                                  const PartialColoring& coloring) {
  ValidationResult out;
  if (coloring.vertex_count() != g.order() || lists.vertex_count() != g.order()) {
    out.ok = false;
    out.violations.push_back(Violation{Violation::Kind::Size});
    return out;
  }
  out.colored_count = coloring.colored_count();
  for (int v = 0; v < g.order(); ++v) {
    const auto c = coloring.get(v);
    if (c && !lists.contains(v, *c)) {
      out.violations.push_back(Violation{Violation::Kind::List, v, -1, *c});
    }
  }
  for (const auto& [u, v] : g.edges()) {
    const auto cu = coloring.get(u);
    if (cu && cu == coloring.get(v)) {
      out.violations.push_back(Violation{Violation::Kind::Edge, u, v, *cu});
    }
  }
  out.ok = out.violations.empty();
  return out;
}

DegeneracyOrder degeneracy_order(const Graph& g) {
  const int n = g.order();
  std::vector<int> degree(static_cast<std::size_t>(n));
  std::set<std::pair<int, int>> queue;
  for (int v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    queue.emplace(degree[v], v);
  }
  std::vector<bool> removed(static_cast<std::size_t>(n), false);
  DegeneracyOrder out;
  out.removal_order.reserve(static_cast<std::size_t>(n));
  while (!queue.empty()) {
    const auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[v] = true;
    out.degeneracy = std::max(out.degeneracy, d);
    out.removal_order.push_back(v);
    for (int w : g.neighbors(v)) {
      if (removed[w]) continue;
      queue.erase({degree[w], w});
      queue.emplace(--degree[w], w);
    }
  }
  return out;
}

int degeneracy_bound(const Graph& g) { return degeneracy_order(g).degeneracy + 1; }

}  // namespace plcbound
