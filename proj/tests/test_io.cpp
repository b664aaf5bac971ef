#include "plcbound/errors.hpp"
#include "plcbound/io.hpp"

#include <doctest.h>

using namespace plcbound;

TEST_CASE("parse_dimacs") {
  SUBCASE("triangle") {
    const Graph g = parse_dimacs_string("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    CHECK(g.order() == 3);
    CHECK(g.size() == 3);
  }
  SUBCASE("edgeless") {
    const Graph g = parse_dimacs_string("p edge 2 0\n");
    CHECK(g.order() == 2);
    CHECK(g.size() == 0);
  }
  SUBCASE("loop is rejected with its line number") {
    try {
      parse_dimacs_string("p edge 2 1\ne 1 1\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(parse_dimacs_string("p edge 2 1\ne 1 3\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs_string("p foo 2 1\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs_string("p edge x\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs_string("e 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs_string("c nothing\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs_string("p edge 2 1\nx 1 2\n"), ParseError);
  }
  SUBCASE("duplicates collapse and count mismatches only warn") {
    std::vector<std::string> warnings;
    const Graph g = parse_dimacs_string("p col 3 3\r\ne 1 2\ne 2 1\n\ne 2 3\n", &warnings);
    CHECK(g.size() == 2);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("declares 3") != std::string::npos);
  }
}

TEST_CASE("write_dimacs round trips the generated families") {
  for (const Graph& g : {generate(Family::Complete, 5), generate(Family::Cycle, 6), generate(Family::Petersen, 0),
                         generate(Family::CompleteBipartite, 3, 4), generate(Family::Empty, 2)}) {
    std::vector<std::string> warnings;
    const Graph back = parse_dimacs_string(write_dimacs(g, "round trip"), &warnings);
    CHECK(back.order() == g.order());
    CHECK(back.edges() == g.edges());
    CHECK(warnings.empty());
  }
}

TEST_CASE("list assignment JSON") {
  const Json doc = Json::parse(R"({"t": 2, "lists": {"1": [1, 2], "2": [3, 2], "3": [1, 3]}})");
  const ListAssignment l = lists_from_json(doc, 3);
  CHECK(l.uniform_size() == 2);
  CHECK(l.contains(1, 2));
  CHECK(lists_from_json(lists_to_json(l), 3) == l);
  CHECK(lists_to_json(l).dump() == R"({"t":2,"lists":{"1":[1,2],"2":[2,3],"3":[1,3]}})");

  CHECK_THROWS_AS(lists_from_json(Json::parse(R"({"t": 3, "lists": {"1": [1, 2]}})"), 1), ParseError);
  CHECK_THROWS_AS(lists_from_json(Json::parse(R"({"lists": {"1": [1, 2]}})"), 2), ParseError);
  CHECK_THROWS_AS(lists_from_json(Json::parse(R"({"lists": {"0": [1]}})"), 1), ParseError);
  CHECK_THROWS_AS(lists_from_json(Json::parse(R"({"lists": {"1": [1, 1]}})"), 1), ParseError);
  CHECK_THROWS_AS(lists_from_json(Json::parse(R"({"lists": {"1": ["a"]}})"), 1), ParseError);
  CHECK_THROWS_AS(lists_from_json(Json::parse(R"([1, 2])"), 1), ParseError);
}

TEST_CASE("partial coloring JSON") {
  const PartialColoring c = coloring_from_json(Json::parse(R"({"colors": {"1": 2, "3": null}})"), 3);
  CHECK(c.get(0) == 2);
  CHECK_FALSE(c.is_colored(1));
  CHECK_FALSE(c.is_colored(2));
  CHECK(coloring_to_json(c).dump() == R"({"colors":{"1":2,"2":null,"3":null}})");
  CHECK(coloring_from_json(coloring_to_json(c), 3) == c);
  CHECK_THROWS_AS(coloring_from_json(Json::parse(R"({"colors": {"4": 1}})"), 3), ParseError);
}
