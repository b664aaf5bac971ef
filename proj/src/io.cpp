#include "plcbound/io.hpp"

#include "plcbound/errors.hpp"

#include <istream>
#include <sstream>

namespace plcbound {

Graph parse_dimacs(std::istream& in, std::vector<std::string>* warnings) {
  std::string line;
  int line_no = 0;
  int n = -1;
  long declared_m = -1;
  int header_line = 0;
  std::vector<Edge> edges;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag) || tag == "c") continue;

    if (tag == "p") {
      if (n >= 0) throw ParseError("duplicate 'p' header", line_no);
      std::string format;
      if (!(fields >> format >> n >> declared_m) || (format != "edge" && format != "col") ||
          n < 0 || declared_m < 0) {
        throw ParseError("malformed header, expected 'p edge <n> <m>'", line_no);
      }
      header_line = line_no;
    } else if (tag == "e") {
      if (n < 0) throw ParseError("edge line before 'p' header", line_no);
      int u = 0;
      int v = 0;
      if (!(fields >> u >> v)) throw ParseError("malformed edge line, expected 'e <u> <v>'", line_no);
      if (u < 1 || v < 1 || u > n || v > n) {
        throw ParseError("vertex out of range 1.." + std::to_string(n), line_no);
      }
      if (u == v) throw ParseError("loop at vertex " + std::to_string(u), line_no);
      edges.emplace_back(u - 1, v - 1);
    } else {
      throw ParseError("unrecognized line type '" + tag + "'", line_no);
    }
  }
  if (n < 0) throw ParseError("missing 'p edge <n> <m>' header", line_no);

  Graph g(n, edges);
  if (warnings && static_cast<long>(g.size()) != declared_m) {
    warnings->push_back("line " + std::to_string(header_line) + ": header declares " +
                        std::to_string(declared_m) + " edges, found " +
                        std::to_string(g.size()) + " distinct edges");
  }
  return g;
}

Graph parse_dimacs_string(const std::string& text, std::vector<std::string>* warnings) {
  std::istringstream in(text);
  return parse_dimacs(in, warnings);
}

std::string write_dimacs(const Graph& g, const std::string& comment) {
  std::ostringstream out;
  if (!comment.empty()) out << "c " << comment << "\n";
  out << "p edge " << g.order() << " " << g.size() << "\n";
  for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
  return out.str();
}

namespace {

int vertex_key(const std::string& key, int n) {
  int v = 0;
  std::size_t used = 0;
  try {
    v = std::stoi(key, &used);
  } catch (const std::exception&) {
    throw ParseError("vertex key '" + key + "' is not an integer", 0);
  }
  if (used != key.size() || v < 1 || v > n) {
    throw ParseError("vertex key '" + key + "' outside 1.." + std::to_string(n), 0);
  }
  return v - 1;
}

}  // namespace

ListAssignment lists_from_json(const Json& doc, int n) {
  if (!doc.is_object() || !doc.contains("lists") || !doc["lists"].is_object()) {
    throw ParseError("list file must be an object with a \"lists\" object", 0);
  }
  std::vector<std::vector<Color>> lists(static_cast<std::size_t>(n));
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (const auto& [key, value] : doc["lists"].items()) {
    const int v = vertex_key(key, n);
    if (!value.is_array()) throw ParseError("list of vertex " + key + " is not an array", 0);
    for (const auto& c : value) {
      if (!c.is_number_integer()) throw ParseError("non-integer color in list of vertex " + key, 0);
      lists[static_cast<std::size_t>(v)].push_back(c.get<Color>());
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  for (int v = 0; v < n; ++v) {
    if (!seen[static_cast<std::size_t>(v)]) {
      throw ParseError("no list for vertex " + std::to_string(v + 1), 0);
    }
  }
  ListAssignment out;
  try {
    out = ListAssignment(std::move(lists));
  } catch (const InvalidParameters& e) {
    throw ParseError(e.what(), 0);
  }
  if (doc.contains("t") && !doc["t"].is_null()) {
    const int t = doc["t"].get<int>();
    if (out.uniform_size() != t) {
      throw ParseError("\"t\" is " + std::to_string(t) + " but lists are not all of that size", 0);
    }
  }
  return out;
}

Json lists_to_json(const ListAssignment& lists) {
  Json doc;
  const auto t = lists.uniform_size();
  doc["t"] = t ? Json(*t) : Json(nullptr);
  Json body = Json::object();
  for (int v = 0; v < lists.vertex_count(); ++v) {
    const auto l = lists.list(v);
    body[std::to_string(v + 1)] = std::vector<Color>(l.begin(), l.end());
  }
  doc["lists"] = std::move(body);
  return doc;
}

PartialColoring coloring_from_json(const Json& doc, int n) {
  if (!doc.is_object() || !doc.contains("colors") || !doc["colors"].is_object()) {
    throw ParseError("coloring file must be an object with a \"colors\" object", 0);
  }
  PartialColoring out(n);
  for (const auto& [key, value] : doc["colors"].items()) {
    const int v = vertex_key(key, n);
    if (value.is_null()) continue;
    if (!value.is_number_integer()) throw ParseError("color of vertex " + key + " is not an integer", 0);
    out.set(v, value.get<Color>());
  }
  return out;
}

Json coloring_to_json(const PartialColoring& coloring) {
  Json body = Json::object();
  for (int v = 0; v < coloring.vertex_count(); ++v) {
    const auto c = coloring.get(v);
    body[std::to_string(v + 1)] = c ? Json(*c) : Json(nullptr);
  }
  return Json{{"colors", std::move(body)}};
}

}  // namespace plcbound
