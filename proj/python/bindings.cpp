#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "ecmg/error.hpp"
#include "ecmg/graph.hpp"
#include "ecmg/io.hpp"
#include "ecmg/matching.hpp"
#include "ecmg/search.hpp"
#include "ecmg/solver.hpp"
#include "ecmg/theorems.hpp"
#include "ecmg/verification.hpp"

namespace py = pybind11;
using namespace ecmg;

namespace {

TheoremId theorem_from(const std::string& name) {
  const auto id = parse_theorem(name);
  if (!id) throw py::value_error("unknown theorem '" + name + "'");
  return *id;
}

ColouredMultigraph make_graph(int n, int c, const std::vector<std::tuple<int, int, int>>& edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (const auto& [u, v, k] : edges) {
    // build() wants u < v; accept either order from Python.
    list.push_back(u < v ? Edge{u, v, k} : Edge{v, u, k});
  }
  return ColouredMultigraph::build(n, c, list);
}

py::object path_to_py(const std::optional<ProperPath>& p) {
  if (!p) return py::none();
  return py::make_tuple(p->vertices, p->colours);
}

}  // namespace

PYBIND11_MODULE(_ecmg, m) {
  m.doc() = "Proper Hamiltonian paths in edge-coloured multigraphs";

  py::register_exception<Error>(m, "EcmgError", PyExc_ValueError);

  py::class_<ColouredMultigraph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("c"), py::arg("edges"))
      .def_static("rainbow_complete", &ColouredMultigraph::rainbow_complete, py::arg("n"), py::arg("c"))
      .def_static("parse", [](const std::string& text) { return parse_graph(text); })
      .def_property_readonly("n", &ColouredMultigraph::n)
      .def_property_readonly("c", &ColouredMultigraph::c)
      .def_property_readonly("m", &ColouredMultigraph::m)
      .def("colours", [](const ColouredMultigraph& g, int u, int v) { return g.colours(u, v).to_vector(); })
      .def("edges",
           [](const ColouredMultigraph& g) {
             std::vector<std::tuple<int, int, int>> out;
             for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v, e.colour);
             return out;
           })
      .def("serialize", &serialize_graph)
      .def("is_connected", [](const ColouredMultigraph& g) { return is_connected(g); })
      .def("rainbow_degree", [](const ColouredMultigraph& g) { return rainbow_degree_graph(g); })
      .def("colour_degree", &colour_degree, py::arg("x"), py::arg("k"))
      .def("complement", &complement)
      .def("__eq__", [](const ColouredMultigraph& a, const ColouredMultigraph& b) { return a == b; })
      .def("__repr__", [](const ColouredMultigraph& g) {
        return "<Graph n=" + std::to_string(g.n()) + " c=" + std::to_string(g.c()) + " m=" + std::to_string(g.m()) +
               ">";
      });

  m.def(
      "find_php", [](const ColouredMultigraph& g) { return path_to_py(find_php(g)); }, py::arg("graph"),
      "Exact search. Returns (vertices, colours) or None.");
  m.def(
      "validate",
      [](const ColouredMultigraph& g, std::vector<int> vertices, std::vector<int> colours) {
        return is_proper_hamiltonian(g, ProperPath{std::move(vertices), std::move(colours)});
      },
      py::arg("graph"), py::arg("vertices"), py::arg("colours"));
  m.def(
      "solve",
      [](const ColouredMultigraph& g, int base_threshold) {
        SolveOptions options;
        options.base_threshold = base_threshold;
        const SolveOutcome out = solve(g, options);
        std::vector<std::string> steps;
        for (const auto& s : out.trace) steps.emplace_back(to_string(s.kind));
        py::dict result;
        result["status"] = std::string(to_string(out.status));
        result["path"] = path_to_py(out.path);
        result["trace"] = steps;
        return result;
      },
      py::arg("graph"), py::arg("base_threshold") = 16);
  m.def(
      "maximum_matching_size",
      [](int n, const std::vector<std::pair<int, int>>& edges) {
        SimpleGraph h(n);
        for (const auto& [u, v] : edges) h.add_edge(u, v);
        return maximum_matching(h).size();
      },
      py::arg("n"), py::arg("edges"));
  m.def(
      "threshold", [](const std::string& id, int n, int c) { return threshold(theorem_from(id), n, c); },
      py::arg("theorem"), py::arg("n"), py::arg("c"));
  m.def(
      "hypothesis_holds", [](const ColouredMultigraph& g, const std::string& id) {
        return hypothesis_holds(g, theorem_from(id));
      },
      py::arg("graph"), py::arg("theorem"));
  m.def(
      "extremal", [](const std::string& id, int n, int c) { return extremal(theorem_from(id), n, c); },
      py::arg("theorem"), py::arg("n"), py::arg("c"));
  m.def(
      "verify_theorem",
      [](const std::string& id, const std::vector<int>& ns, int c, std::uint64_t samples, std::uint64_t seed) {
        const auto report = verify_theorem(theorem_from(id), ns, c, samples, seed);
        py::dict d;
        d["trials"] = report.trials;
        d["met"] = report.hypothesis_met;
        d["ok"] = report.successes;
        d["violations"] = report.violation_count();
        d["line"] = format_report(report);
        return d;
      },
      py::arg("theorem"), py::arg("ns"), py::arg("c"), py::arg("samples"), py::arg("seed"));
}
