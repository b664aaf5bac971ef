#include "oracles.hpp"

#include "plcbound/errors.hpp"
#include "plcbound/graph.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace plcbound;

namespace {

bool regular(const Graph& g, int d) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != d) return false;
  }
  return true;
}

// Greedy along the reverse of the elimination order, smallest free color.
bool greedy_succeeds(const Graph& g, const ListAssignment& lists) {
  auto order = degeneracy_order(g).removal_order;
  std::reverse(order.begin(), order.end());
  PartialColoring col(g.order());
  for (int v : order) {
    bool placed = false;
    for (Color c : lists.list(v)) {
      bool free = true;
      for (int w : g.neighbors(v)) free = free && col.get(w) != c;
      if (free) {
        col.set(v, c);
        placed = true;
        break;
      }
    }
    if (!placed) return false;
  }
  return validate_partial(g, lists, col).ok;
}

}  // namespace

TEST_CASE("Graph construction") {
  const Graph g(4, {{0, 1}, {1, 0}, {1, 2}, {1, 2}});
  CHECK(g.order() == 4);
  CHECK(g.size() == 2);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.degree(3) == 0);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), InvalidParameters);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), InvalidParameters);

  const Graph k4 = generate(Family::Complete, 4);
  const std::vector<int> pick{3, 1, 0};
  const Graph sub = k4.induced(pick);
  CHECK(sub.order() == 3);
  CHECK(sub.size() == 3);
}

TEST_CASE("generated families") {
  CHECK(generate(Family::Complete, 4).size() == 6);
  const Graph c5 = generate(Family::Cycle, 5);
  CHECK(c5.size() == 5);
  CHECK(regular(c5, 2));
  const Graph pet = generate(Family::Petersen, 0);
  CHECK(pet.order() == 10);
  CHECK(pet.size() == 15);
  CHECK(regular(pet, 3));
  const Graph k33 = generate(Family::CompleteBipartite, 3, 3);
  CHECK(k33.order() == 6);
  CHECK(k33.size() == 9);
  CHECK(regular(k33, 3));
  CHECK(generate(Family::CompleteBipartite, 2, 4).size() == 8);
  CHECK(generate(Family::Path, 4).size() == 3);
  CHECK(generate(Family::Empty, 3).size() == 0);

  CHECK_THROWS_AS(generate(Family::Cycle, 2), InvalidParameters);
  CHECK_THROWS_AS(generate(Family::Complete, 0), InvalidParameters);
  CHECK_THROWS_AS(generate(Family::CompleteBipartite, 0, 2), InvalidParameters);
  CHECK(parse_family("complete_bipartite") == Family::CompleteBipartite);
  CHECK(family_name(parse_family("petersen")) == "petersen");
  CHECK_THROWS_AS(parse_family("wheel"), InvalidParameters);
}

TEST_CASE("ListAssignment") {
  const ListAssignment l({{2, 1}, {3, 1}});
  CHECK(l.list(0)[0] == 1);
  CHECK(l.contains(1, 3));
  CHECK_FALSE(l.contains(1, 2));
  CHECK(l.uniform_size() == 2);
  CHECK(l.color_union() == std::vector<Color>{1, 2, 3});
  CHECK_FALSE(ListAssignment({{1}, {1, 2}}).uniform_size().has_value());
  CHECK_THROWS_AS(ListAssignment(std::vector<std::vector<Color>>{{}}), InvalidParameters);
  CHECK_THROWS_AS(ListAssignment({{1, 1}}), InvalidParameters);
  CHECK_THROWS_AS(ListAssignment({{-1, 2}}), InvalidParameters);
}

TEST_CASE("random_lists") {
  const auto a = random_lists(30, 3, 7, 99);
  const auto b = random_lists(30, 3, 7, 99);
  CHECK(a == b);
  CHECK(a.uniform_size() == 3);
  for (Color c : a.color_union()) {
    CHECK(c >= 1);
    CHECK(c <= 7);
  }
  CHECK_THROWS_AS(random_lists(3, 4, 3, 1), InvalidParameters);
}

TEST_CASE("validate_partial examples on K3 with lists {1,2}") {
  const Graph k3 = generate(Family::Complete, 3);
  const auto lists = ListAssignment::uniform(3, {1, 2});
  PartialColoring ok(3);
  ok.set(0, 1);
  ok.set(1, 2);
  auto r = validate_partial(k3, lists, ok);
  CHECK(r.ok);
  CHECK(r.colored_count == 2);

  PartialColoring clash(3);
  clash.set(0, 1);
  clash.set(1, 1);
  r = validate_partial(k3, lists, clash);
  CHECK_FALSE(r.ok);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].kind == Violation::Kind::Edge);

  PartialColoring off_list(3);
  off_list.set(0, 3);
  r = validate_partial(k3, lists, off_list);
  CHECK_FALSE(r.ok);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].kind == Violation::Kind::List);

  CHECK(validate_partial(k3, lists, PartialColoring(2)).violations[0].kind == Violation::Kind::Size);
}

TEST_CASE("uncoloring a vertex keeps a valid coloring valid") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = generate(trial % 2 ? Family::Petersen : Family::Cycle, 7);
    const auto lists = random_lists(g.order(), 2, 4, static_cast<std::uint64_t>(trial));
    PartialColoring col(g.order());
    for (int v = 0; v < g.order(); ++v) {
      for (Color c : lists.list(v)) {
        bool free = true;
        for (int w : g.neighbors(v)) free = free && col.get(w) != c;
        if (free && rng() % 3 != 0) {
          col.set(v, c);
          break;
        }
      }
    }
    REQUIRE(validate_partial(g, lists, col).ok);
    const int v = static_cast<int>(rng() % static_cast<std::uint64_t>(g.order()));
    col.clear(v);
    CHECK(validate_partial(g, lists, col).ok);
  }
}

TEST_CASE("degeneracy_bound") {
  const Graph c5 = generate(Family::Cycle, 5);
  const Graph k4 = generate(Family::Complete, 4);
  const Graph pet = generate(Family::Petersen, 0);
  CHECK(degeneracy_bound(c5) == 3);
  CHECK(degeneracy_bound(k4) == 4);
  CHECK(degeneracy_bound(pet) == 4);
  CHECK(degeneracy_bound(generate(Family::Empty, 3)) == 1);
  for (const Graph* g : {&c5, &k4, &pet}) CHECK(degeneracy_bound(*g) == oracle::brute_degeneracy(*g) + 1);

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Edge> edges;
    for (int u = 0; u < 9; ++u) {
      for (int v = u + 1; v < 9; ++v) {
        if (rng() % 3 == 0) edges.emplace_back(u, v);
      }
    }
    const Graph g(9, edges);
    CHECK(degeneracy_order(g).degeneracy == oracle::brute_degeneracy(g));
  }
}

TEST_CASE("greedy from lists of size degeneracy_bound always succeeds") {
  for (const Graph& g : {generate(Family::Cycle, 5), generate(Family::Complete, 4), generate(Family::Petersen, 0)}) {
    const int s = degeneracy_bound(g);
    for (int k = 0; k < 50; ++k) {
      const auto lists = random_lists(g.order(), s, s + k % 5, 500 + static_cast<std::uint64_t>(k));
      CHECK(greedy_succeeds(g, lists));
    }
  }
}
