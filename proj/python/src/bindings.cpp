#include "plcbound/analytic.hpp"
#include "plcbound/errors.hpp"
#include "plcbound/exact.hpp"
#include "plcbound/graph.hpp"
#include "plcbound/io.hpp"
#include "plcbound/scheme.hpp"
#include "plcbound/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace plcbound;

namespace {

py::int_ to_pyint(const BigInt& value) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(value.str().c_str(), nullptr, 10));
}

using PyColoring = std::vector<std::optional<Color>>;

PyColoring to_py(const PartialColoring& c) {
  PyColoring out;
  for (int v = 0; v < c.vertex_count(); ++v) out.push_back(c.get(v));
  return out;
}

PartialColoring from_py(const PyColoring& c) {
  PartialColoring out(static_cast<int>(c.size()));
  for (std::size_t v = 0; v < c.size(); ++v) {
    if (c[v]) out.set(static_cast<int>(v), *c[v]);
  }
  return out;
}

EnumerationOptions enum_options(int palette_cap, std::uint64_t budget, bool shortcuts) {
  EnumerationOptions o;
  o.palette_cap = palette_cap;
  o.node_budget = budget;
  o.use_shortcuts = shortcuts;
  return o;
}

}  // namespace

PYBIND11_MODULE(_plcbound, m) {
  m.doc() = "Partial list coloring bounds: q(s,t), exact oracles and the derandomized scheme";
  m.attr("__version__") = PLCBOUND_VERSION;

  py::register_exception<InvalidParameters>(m, "InvalidParameters", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ResourceExhausted>(m, "ResourceExhausted", PyExc_RuntimeError);
  py::register_exception<SchemeInapplicable>(m, "SchemeInapplicable", PyExc_RuntimeError);

  // -- analytic -------------------------------------------------------------
  py::class_<QValue>(m, "QValue")
      .def_property_readonly("s", [](const QValue& q) { return q.params.s(); })
      .def_property_readonly("t", [](const QValue& q) { return q.params.t(); })
      .def_readonly("q", &QValue::q)
      .def_readonly("bracket_lo", &QValue::bracket_lo)
      .def_readonly("bracket_hi", &QValue::bracket_hi)
      .def_readonly("residual", &QValue::residual)
      .def("__float__", [](const QValue& q) { return q.q; })
      .def("__repr__", [](const QValue& q) {
        return "QValue(s=" + std::to_string(q.params.s()) + ", t=" + std::to_string(q.params.t()) +
               ", q=" + format_double(q.q, 15) + ")";
      });

  py::class_<LemmaBounds>(m, "LemmaBounds")
      .def_readonly("q", &LemmaBounds::q)
      .def_readonly("lower", &LemmaBounds::lower)
      .def_readonly("upper", &LemmaBounds::upper)
      .def_property_readonly("ok", &LemmaBounds::ok);

  m.def("eval_f", [](int s, int t, double x) { return eval_f(BoundParams(s, t), x); }, py::arg("s"),
        py::arg("t"), py::arg("x"));
  m.def("compute_q", [](int s, int t, double tol) { return compute_q(BoundParams(s, t), tol); }, py::arg("s"),
        py::arg("t"), py::arg("tol") = kDefaultRootTol);
  m.def("check_lemma_bounds", [](int s, int t) { return check_lemma_bounds(BoundParams(s, t)); }, py::arg("s"),
        py::arg("t"));
  m.def("eval_g", [](double v) { return eval_g(v).g_value; }, py::arg("v"));
  m.def(
      "poly_coeffs",
      [](int s, int t) {
        const IntPolynomial p = poly_coeffs(BoundParams(s, t));
        py::list out;
        for (const auto& c : p.coefficients()) out.append(to_pyint(c));
        return out;
      },
      py::arg("s"), py::arg("t"), "Exact integer coefficients of u^t f(x), lowest degree first.");
  m.def("limit_ratio", &limit_ratio, py::arg("v"));
  m.def(
      "ratio_scan",
      [](int s_max) {
        const RatioReport r = ratio_scan(s_max);
        py::dict out;
        out["grid_min"] = r.grid_min;
        out["grid_min_at"] = py::make_tuple(r.grid_min_s, r.grid_min_t);
        out["limit_min"] = r.limit_min;
        out["limit_argmin_v"] = r.limit_argmin_v;
        py::list grid;
        for (const auto& e : r.grid) grid.append(py::make_tuple(e.s, e.t, e.q, e.ratio));
        out["grid"] = grid;
        return out;
      },
      py::arg("s_max"));

  // -- graphs ---------------------------------------------------------------
  py::class_<Graph>(m, "Graph", "Simple undirected graph on vertices 0..n-1.")
      .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph(n, edges); }), py::arg("n"),
           py::arg("edges") = std::vector<Edge>{})
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("edges", &Graph::edges)
      .def("neighbors", &Graph::neighbors, py::arg("v"))
      .def("adjacent", &Graph::adjacent)
      .def("to_dimacs", [](const Graph& g) { return write_dimacs(g); })
      .def("__repr__", [](const Graph& g) {
        return "Graph(order=" + std::to_string(g.order()) + ", size=" + std::to_string(g.size()) + ")";
      });

  m.def("generate", [](const std::string& family, int size, int size2) {
    return generate(parse_family(family), size, size2);
  }, py::arg("family"), py::arg("size") = 0, py::arg("size2") = -1);
  m.def("parse_dimacs", [](const std::string& text) { return parse_dimacs_string(text); }, py::arg("text"));
  m.def("degeneracy_bound", &degeneracy_bound, py::arg("graph"));

  py::class_<ListAssignment>(m, "ListAssignment")
      .def(py::init<std::vector<std::vector<Color>>>(), py::arg("lists"))
      .def_property_readonly("lists", &ListAssignment::lists)
      .def_property_readonly("uniform_size", &ListAssignment::uniform_size)
      .def("color_union", &ListAssignment::color_union)
      .def("to_json", [](const ListAssignment& l) { return lists_to_json(l).dump(); })
      .def("__eq__", [](const ListAssignment& a, const ListAssignment& b) { return a == b; });

  m.def("random_lists", &random_lists, py::arg("n"), py::arg("t"), py::arg("palette"), py::arg("seed"));
  m.def(
      "validate_partial",
      [](const Graph& g, const ListAssignment& l, const PyColoring& c) {
        const auto r = validate_partial(g, l, from_py(c));
        std::vector<std::string> violations;
        for (const auto& v : r.violations) violations.push_back(v.describe());
        return py::make_tuple(r.colored_count, r.ok, violations);
      },
      py::arg("graph"), py::arg("lists"), py::arg("coloring"));

  // -- exact solvers --------------------------------------------------------
  m.def(
      "find_list_coloring",
      [](const Graph& g, const ListAssignment& l, std::uint64_t budget) -> std::optional<PyColoring> {
        const auto c = find_list_coloring(g, l, ColoringSearch{{}, budget});
        if (!c) return std::nullopt;
        return to_py(*c);
      },
      py::arg("graph"), py::arg("lists"), py::arg("node_budget") = kDefaultNodeBudget);
  m.def(
      "max_partial_colorable",
      [](const Graph& g, const ListAssignment& l, std::uint64_t budget) {
        const auto r = max_partial_colorable(g, l, budget);
        return py::make_tuple(r.count, to_py(r.coloring));
      },
      py::arg("graph"), py::arg("lists"), py::arg("node_budget") = kDefaultNodeBudget);
  m.def("chromatic_number", &chromatic_number, py::arg("graph"), py::arg("node_budget") = kDefaultNodeBudget);
  m.def(
      "is_s_choosable",
      [](const Graph& g, int s, int cap, std::uint64_t budget, bool shortcuts) {
        const auto r = is_s_choosable(g, s, enum_options(cap, budget, shortcuts));
        return py::make_tuple(r.ok, r.bad);
      },
      py::arg("graph"), py::arg("s"), py::arg("palette_cap") = 0, py::arg("node_budget") = kDefaultNodeBudget,
      py::arg("use_shortcuts") = true);
  m.def(
      "chi_ell",
      [](const Graph& g, int cap, std::uint64_t budget) {
        const auto r = chi_ell(g, enum_options(cap, budget, true));
        py::dict out;
        out["chi_ell"] = r.chi_ell;
        out["chi"] = r.chi;
        out["bad_assignment"] = r.bad_assignment;
        return out;
      },
      py::arg("graph"), py::arg("palette_cap") = 0, py::arg("node_budget") = kDefaultNodeBudget);
  m.def(
      "lambda_t",
      [](const Graph& g, int t, int cap, std::uint64_t budget) {
        const auto r = lambda_t(g, t, enum_options(cap, budget, true));
        py::dict out;
        out["value"] = r.value;
        out["witness_assignment"] = r.witness_assignment;
        out["witness_coloring"] = to_py(r.witness_coloring);
        return out;
      },
      py::arg("graph"), py::arg("t"), py::arg("palette_cap") = 0, py::arg("node_budget") = kDefaultNodeBudget);

  // -- partition scheme -----------------------------------------------------
  m.def(
      "build_scheme",
      [](const Graph& g, const ListAssignment& l, int s) {
        const SchemeState st = build_scheme(g, l, s);
        py::dict out;
        out["phi"] = st.phi;
        out["pi_colors"] = st.pi_colors;
        out["independent_sets"] = st.independent_sets;
        out["core"] = st.core;
        out["palette"] = st.palette;
        return out;
      },
      py::arg("graph"), py::arg("lists"), py::arg("s"));
  m.def(
      "derandomize",
      [](const Graph& g, const ListAssignment& l, int s) {
        const SchemeOutcome o = derandomize(g, l, s);
        py::dict out;
        out["coloring"] = to_py(o.coloring);
        out["colored_count"] = o.colored_count;
        out["expected_count"] = o.expected_count;
        out["q_used"] = o.q_used;
        out["guaranteed_count"] = o.guaranteed_count;
        out["expectation_monotone"] = o.expectation_monotone();
        return out;
      },
      py::arg("graph"), py::arg("lists"), py::arg("s"));
  m.def(
      "monte_carlo",
      [](const Graph& g, const ListAssignment& l, int s, int trials, std::uint64_t seed) {
        const MonteCarloResult r = monte_carlo(g, l, s, trials, seed);
        py::dict out;
        out["q"] = r.q;
        out["mean_fraction"] = r.mean_fraction;
        out["stddev"] = r.stddev;
        out["stddev_of_mean"] = r.stddev_of_mean;
        return out;
      },
      py::arg("graph"), py::arg("lists"), py::arg("s"), py::arg("trials"), py::arg("seed") = 0);

  m.def(
      "run_reproduction_checks",
      [](bool quick) {
        ReproductionOptions opt;
        opt.quick = quick;
        std::vector<py::dict> out;
        for (const Check& c : run_reproduction_checks(opt)) {
          py::dict d;
          d["id"] = c.id;
          d["label"] = c.label;
          d["expected"] = c.expected;
          d["observed"] = c.observed;
          d["pass"] = c.pass;
          d["seconds"] = c.seconds;
          out.push_back(std::move(d));
        }
        return out;
      },
      py::arg("quick") = true);
}
