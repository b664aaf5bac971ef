#include "oracles.hpp"

#include "plcbound/errors.hpp"
#include "plcbound/exact.hpp"

#include <doctest.h>

#include <map>
#include <random>
#include <set>

using namespace plcbound;

namespace {

Graph random_graph(int n, std::mt19937_64& rng, int one_in = 2) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng() % static_cast<std::uint64_t>(one_in) == 0) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

EnumerationOptions no_shortcuts(int cap = 0) {
  EnumerationOptions o;
  o.palette_cap = cap;
  o.use_shortcuts = false;
  return o;
}

}  // namespace

TEST_CASE("find_list_coloring examples") {
  const Graph k3 = generate(Family::Complete, 3);
  CHECK_FALSE(find_list_coloring(k3, ListAssignment::uniform(3, {1, 2})).has_value());

  const ListAssignment distinct({{1, 2}, {1, 3}, {2, 3}});
  const auto c = find_list_coloring(k3, distinct);
  REQUIRE(c.has_value());
  CHECK(validate_partial(k3, distinct, *c).ok);
  CHECK(c->colored_count() == 3);
  CHECK(oracle::naive_colorable(k3, distinct));

  const Graph empty = generate(Family::Empty, 3);
  const ListAssignment lists({{4, 7}, {2}, {5, 9}});
  const auto first = find_list_coloring(empty, lists);
  REQUIRE(first.has_value());
  CHECK(first->get(0) == 4);
  CHECK(first->get(1) == 2);
  CHECK(first->get(2) == 5);

  CHECK_THROWS_AS(find_list_coloring(k3, ListAssignment::uniform(2, {1})), InvalidParameters);
}

TEST_CASE("find_list_coloring respects the node budget") {
  const Graph k6 = generate(Family::Complete, 6);
  CHECK_THROWS_AS(find_list_coloring(k6, ListAssignment::uniform(6, {1, 2, 3, 4, 5}), ColoringSearch{{}, 50}),
                  ResourceExhausted);
}

TEST_CASE("max_partial_colorable examples") {
  const Graph k3 = generate(Family::Complete, 3);
  const auto same = ListAssignment::uniform(3, {1, 2});
  const auto r = max_partial_colorable(k3, same);
  CHECK(r.count == 2);
  CHECK(oracle::naive_max_partial(k3, same) == 2);
  // Lexicographically first optimum: colors ascending, uncolored last.
  CHECK(r.coloring.get(0) == 1);
  CHECK(r.coloring.get(1) == 2);
  CHECK_FALSE(r.coloring.is_colored(2));

  const Graph c5 = generate(Family::Cycle, 5);
  CHECK(max_partial_colorable(c5, ListAssignment::uniform(5, {1, 2})).count == 4);

  const Graph pet = generate(Family::Petersen, 0);
  const int size = pet.max_degree() + 1;
  const auto big = random_lists(10, size, 8, 3);
  CHECK(max_partial_colorable(pet, big).count == 10);
}

TEST_CASE("max_partial_colorable agrees with the naive oracle and find_list_coloring") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Graph g = random_graph(n, rng);
    const int t = 1 + static_cast<int>(rng() % 3);
    const auto lists = random_lists(n, t, t + static_cast<int>(rng() % 3), rng());
    const auto r = max_partial_colorable(g, lists);
    const auto v = validate_partial(g, lists, r.coloring);
    REQUIRE(v.ok);
    CHECK(v.colored_count == r.count);
    CHECK(r.count == oracle::naive_max_partial(g, lists));
    CHECK((r.count == n) == find_list_coloring(g, lists).has_value());
  }
}

TEST_CASE("chromatic_number") {
  CHECK(chromatic_number(generate(Family::Complete, 3)) == 3);
  CHECK(chromatic_number(generate(Family::Cycle, 5)) == 3);
  CHECK(chromatic_number(generate(Family::Cycle, 4)) == 2);
  CHECK(chromatic_number(generate(Family::Petersen, 0)) == 3);
  CHECK(chromatic_number(generate(Family::Empty, 4)) == 1);
  CHECK(chromatic_number(Graph(0, {})) == 0);
}

TEST_CASE("restricted-growth enumeration") {
  SUBCASE("t = 1 visits set partitions (Bell numbers)") {
    auto count = [](int n) {
      return visit_canonical_assignments(n, 1, n, [](auto) { return Visit::Descend; });
    };
    CHECK(count(3) == 5);
    CHECK(count(4) == 15);
    CHECK(count(5) == 52);
  }
  SUBCASE("every assignment has a canonical renaming in the enumeration") {
    const int n = 4;
    const int t = 2;
    const int cap = 8;
    std::set<std::vector<std::vector<Color>>> seen;
    visit_canonical_assignments(n, t, cap, [&](std::span<const std::vector<Color>> prefix) {
      if (static_cast<int>(prefix.size()) == n) seen.emplace(prefix.begin(), prefix.end());
      return Visit::Descend;
    });
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
      const auto lists = random_lists(n, t, 9, rng());
      std::map<Color, Color> rename;
      Color next = 1;
      std::vector<std::vector<Color>> canon;
      for (const auto& l : lists.lists()) {
        std::vector<Color> out;
        for (Color c : l) {
          if (!rename.count(c)) rename[c] = next++;
          out.push_back(rename[c]);
        }
        std::sort(out.begin(), out.end());
        canon.push_back(out);
      }
      CHECK(seen.count(canon) == 1);
    }
  }
  SUBCASE("palette cap below the list size is rejected") {
    CHECK_THROWS_AS(visit_canonical_assignments(2, 3, 2, [](auto) { return Visit::Descend; }), InvalidParameters);
  }
}

TEST_CASE("is_s_choosable examples") {
  const Graph c4 = generate(Family::Cycle, 4);
  const Graph k3 = generate(Family::Complete, 3);
  const Graph k33 = generate(Family::CompleteBipartite, 3, 3);

  CHECK(is_s_choosable(c4, 2).ok);
  const auto c4_enum = is_s_choosable(c4, 2, no_shortcuts());
  CHECK(c4_enum.ok);
  CHECK(c4_enum.method == "enumeration");
  CHECK(c4_enum.assignments_checked > 0);

  for (const auto& opts : {EnumerationOptions{}, no_shortcuts()}) {
    const auto r = is_s_choosable(k3, 2, opts);
    CHECK_FALSE(r.ok);
    REQUIRE(r.bad.has_value());
    CHECK(*r.bad == ListAssignment::uniform(3, {1, 2}));
  }

  const auto k = is_s_choosable(k33, 2);
  CHECK_FALSE(k.ok);
  CHECK(k.method == "enumeration");
  REQUIRE(k.bad.has_value());
  CHECK(k.bad->uniform_size() == 2);
  CHECK_FALSE(find_list_coloring(k33, *k.bad).has_value());
  CHECK(oracle::naive_max_partial(k33, *k.bad) < 6);

  CHECK(is_s_choosable(generate(Family::Petersen, 0), 4).method == "degeneracy");
  CHECK_THROWS_AS(is_s_choosable(c4, 0), InvalidParameters);
  CHECK_THROWS_AS(is_s_choosable(k33, 2, EnumerationOptions{0, 1000, true}), ResourceExhausted);
}

TEST_CASE("canonical choosability matches naive enumeration on the same palette") {
  struct Case {
    Graph g;
    int s;
    int palette;
  };
  const Case cases[] = {
      {generate(Family::Complete, 3), 2, 4},
      {generate(Family::Cycle, 4), 2, 5},
      {generate(Family::Path, 3), 1, 2},
      {generate(Family::Complete, 3), 3, 5},
      {generate(Family::CompleteBipartite, 2, 2), 2, 5},
  };
  for (const auto& c : cases) {
    CHECK(is_s_choosable(c.g, c.s, no_shortcuts(c.palette)).ok == oracle::naive_choosable(c.g, c.s, c.palette));
  }
}

TEST_CASE("choosability is monotone in s") {
  for (const Graph& g : {generate(Family::Cycle, 4), generate(Family::Complete, 3), generate(Family::Path, 4)}) {
    for (int s = 1; s <= 3; ++s) {
      if (is_s_choosable(g, s, no_shortcuts()).ok) CHECK(is_s_choosable(g, s + 1, no_shortcuts()).ok);
    }
  }
}

TEST_CASE("chi_ell examples") {
  const auto k3 = chi_ell(generate(Family::Complete, 3));
  CHECK(k3.chi_ell == 3);
  CHECK(k3.chi == 3);
  const auto c5 = chi_ell(generate(Family::Cycle, 5));
  CHECK(c5.chi_ell == 3);
  CHECK(c5.chi == 3);
  const Graph c4g = generate(Family::Cycle, 4);
  const auto c4 = chi_ell(c4g);
  CHECK(c4.chi_ell == 2);
  CHECK(c4.chi == 2);
  REQUIRE(c4.bad_assignment.has_value());
  CHECK_FALSE(find_list_coloring(c4g, *c4.bad_assignment).has_value());

  CHECK(chi_ell(generate(Family::CompleteBipartite, 2, 3)).chi_ell == 2);
  const Graph k24 = generate(Family::CompleteBipartite, 2, 4);
  const auto r = chi_ell(k24);
  CHECK(r.chi == 2);
  CHECK(r.chi_ell == 3);
  REQUIRE(r.bad_assignment.has_value());
  CHECK(r.bad_assignment->uniform_size() == 2);
  CHECK_FALSE(find_list_coloring(k24, *r.bad_assignment).has_value());

  CHECK(chi_ell(generate(Family::Empty, 3)).chi_ell == 1);
}

TEST_CASE("lambda_t examples") {
  const Graph k3 = generate(Family::Complete, 3);
  const Graph c5 = generate(Family::Cycle, 5);
  CHECK(lambda_t(k3, 1).value == 1);
  CHECK(lambda_t(k3, 2).value == 2);
  const auto l = lambda_t(c5, 2);
  CHECK(l.value == 4);
  const auto v = validate_partial(c5, l.witness_assignment, l.witness_coloring);
  CHECK(v.ok);
  CHECK(v.colored_count == 4);
  CHECK(max_partial_colorable(c5, l.witness_assignment).count == 4);
  CHECK(lambda_t(c5, 1).value == 2);
  CHECK_THROWS_AS(lambda_t(k3, 0), InvalidParameters);
}

TEST_CASE("lambda_t matches the naive min-max on the smallest cases") {
  const Graph k3 = generate(Family::Complete, 3);
  CHECK(oracle::naive_lambda(k3, 1, 3) == lambda_t(k3, 1).value);
  CHECK(oracle::naive_lambda(k3, 2, 6) == lambda_t(k3, 2).value);
  const Graph p3 = generate(Family::Path, 3);
  CHECK(oracle::naive_lambda(p3, 1, 3) == lambda_t(p3, 1).value);
  const Graph c4 = generate(Family::Cycle, 4);
  CHECK(oracle::naive_lambda(c4, 1, 4) == lambda_t(c4, 1).value);
}

TEST_CASE("lambda_t is monotone in t and the conjectured bound holds") {
  const Graph graphs[] = {generate(Family::Complete, 3), generate(Family::Cycle, 4), generate(Family::Cycle, 5),
                          generate(Family::Path, 4), generate(Family::CompleteBipartite, 2, 3)};
  for (const Graph& g : graphs) {
    const int ch = chi_ell(g).chi_ell;
    int previous = 0;
    for (int t = 1; t <= 2; ++t) {
      const int value = lambda_t(g, t).value;
      CHECK(value >= previous);
      CHECK(value <= g.order());
      if (t <= ch) CHECK(value * ch >= t * g.order());
      if (t >= ch) CHECK(value == g.order());
      previous = value;
    }
  }
}
