#include "sqroot/generators.hpp"
#include "sqroot/graph_io.hpp"
#include "sqroot/oracle.hpp"
#include "sqroot/ptolemaic_root.hpp"
#include "sqroot/recognizers.hpp"
#include "sqroot/split_root.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace sqroot;

namespace {

Graph from_pairs(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [u, v] : pairs) edges.push_back({u, v});
  return Graph(n, edges);
}

std::vector<std::pair<Vertex, Vertex>> to_pairs(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

py::object witness(const std::optional<ForbiddenPattern>& w) {
  if (!w) return py::none();
  return py::make_tuple(std::string(to_string(w->id)), w->witness);
}

}  // namespace

PYBIND11_MODULE(_sqroot, m) {
  m.doc() = "Ptolemaic and 3-sun-free split square roots";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<GenerationError>(m, "GenerationError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<std::size_t>(), py::arg("n") = 0)
      .def(py::init(&from_pairs), py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("m", &Graph::edge_count)
      .def("edges", &to_pairs)
      .def("adjacent", &Graph::adjacent)
      .def("neighbors", [](const Graph& g, Vertex v) { return g.neighbors(v).members(); })
      .def("degree", &Graph::degree)
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("parse", [](const std::string& text) { return parse_graph(text); }, py::arg("text"));
  m.def("to_edge_list", &serialize_edge_list);
  m.def("to_dot", &serialize_dot);
  m.def("square", &square);
  m.def("is_connected", &is_connected);

  m.def("is_chordal", [](const Graph& g) { return chordal_order(g).chordal(); });
  m.def("is_split", &is_split);
  m.def("is_distance_hereditary", &is_distance_hereditary);
  m.def("is_ptolemaic", &is_ptolemaic);
  m.def("is_hereditary_clique_helly", &is_hereditary_clique_helly);
  m.def("find_gem", [](const Graph& g) { return witness(find_gem(g)); });
  m.def("find_3sun", [](const Graph& g) { return witness(find_3sun(g)); });

  py::class_<RootResult>(m, "RootResult")
      .def_property_readonly("found", &RootResult::found)
      .def_readonly("root", &RootResult::root)
      .def_property_readonly("edges", &RootResult::edges)
      .def_property_readonly("stage", [](const RootResult& r) -> py::object {
        if (!r.stage) return py::none();
        return py::str(std::string(to_string(*r.stage)));
      })
      .def_readonly("square_matches", &RootResult::square_matches)
      .def_readonly("in_class", &RootResult::in_class)
      .def_readonly("root_is_tree", &RootResult::root_is_tree)
      .def_readonly("root_is_block_graph", &RootResult::root_is_block_graph)
      .def_property_readonly("witness", [](const RootResult& r) { return witness(r.witness); })
      .def_property_readonly("clique", [](const RootResult& r) -> py::object {
        if (!r.split) return py::none();
        return py::cast(r.split->clique);
      })
      .def_property_readonly("representatives", [](const RootResult& r) -> py::object {
        if (!r.split) return py::none();
        return py::cast(r.split->representatives);
      });

  m.def("ptolemaic_root", &ptolemaic_square_root, py::call_guard<py::gil_scoped_release>());
  m.def("split_root", &three_sun_free_split_root, py::call_guard<py::gil_scoped_release>());

  m.def(
      "oracle",
      [](const Graph& g, const std::string& cls, std::uint64_t budget) -> py::object {
        const auto parsed = root_class_from_string(cls);
        if (!parsed) throw py::value_error("unknown root class: " + cls);
        OracleResult r;
        {
          py::gil_scoped_release release;
          r = min_root_bruteforce(g, *parsed, budget);
        }
        if (r.status == OracleStatus::BudgetExceeded) return py::str("budget-exceeded");
        if (r.status == OracleStatus::NoRoot) return py::none();
        return py::cast(*r.root);
      },
      py::arg("g"), py::arg("cls") = "any", py::arg("budget") = kDefaultOracleBudget,
      "Minimum-edge root by exhaustive search: a Graph, None, or 'budget-exceeded'.");

  m.def(
      "random_ptolemaic",
      [](std::size_t n, std::uint64_t seed, double pendant, double true_twin, double false_twin, bool shuffle) {
        PtolemaicGenSpec spec;
        spec.vertices = n;
        spec.seed = seed;
        spec.pendant_weight = pendant;
        spec.true_twin_weight = true_twin;
        spec.false_twin_weight = false_twin;
        spec.shuffle_labels = shuffle;
        return random_ptolemaic(spec);
      },
      py::arg("n"), py::arg("seed") = 0, py::arg("pendant") = 1.0, py::arg("true_twin") = 1.0,
      py::arg("false_twin") = 1.0, py::arg("shuffle") = true);

  m.def(
      "random_split",
      [](std::size_t clique, std::size_t independent, double density, const std::string& mode, std::uint64_t seed,
         bool shuffle) {
        SplitGenSpec spec;
        spec.clique_size = clique;
        spec.independent_size = independent;
        spec.density = density;
        if (mode == "nested")
          spec.mode = SplitMode::Nested;
        else if (mode == "laminar")
          spec.mode = SplitMode::Laminar;
        else if (mode == "rejection")
          spec.mode = SplitMode::Rejection;
        else
          throw py::value_error("unknown split mode: " + mode);
        spec.seed = seed;
        spec.shuffle_labels = shuffle;
        return random_3sunfree_split(spec);
      },
      py::arg("clique"), py::arg("independent"), py::arg("density") = 0.5, py::arg("mode") = "nested",
      py::arg("seed") = 0, py::arg("shuffle") = true);
}
