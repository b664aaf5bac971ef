#pragma once

// DIMACS .col graphs and the JSON list / coloring formats:
//
//   lists:    {"t": 2, "lists": {"1": [1, 2], "2": [2, 3], ...}}
//   coloring: {"colors": {"1": 2, "3": null, ...}}        (null = uncolored)
//
// Vertex keys are 1-based, matching DIMACS.

#include "plcbound/graph.hpp"

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace plcbound {

using Json = nlohmann::ordered_json;

/// Parses `c` comments, one `p edge n m` (or `p col n m`) header and `e u v`
/// edge lines. Duplicate edges collapse. Throws ParseError with the line
/// number on malformed headers, out-of-range vertices and loops. A declared
/// edge count that disagrees with the distinct edges found is reported in
/// `warnings` (when non-null) instead of failing.
Graph parse_dimacs(std::istream& in, std::vector<std::string>* warnings = nullptr);
Graph parse_dimacs_string(const std::string& text, std::vector<std::string>* warnings = nullptr);

std::string write_dimacs(const Graph& g, const std::string& comment = "");

/// Every vertex 1..n must have a list. Throws ParseError on schema problems
/// and when "t" disagrees with a list size.
ListAssignment lists_from_json(const Json& doc, int n);
Json lists_to_json(const ListAssignment& lists);

/// Missing vertices are uncolored.
PartialColoring coloring_from_json(const Json& doc, int n);
Json coloring_to_json(const PartialColoring& coloring);

}  // namespace plcbound
