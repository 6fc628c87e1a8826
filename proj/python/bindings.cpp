// Python bindings for the enumeration core. Vertex sets cross the boundary
// as plain lists of ints; families keep their emission order.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "covenum/capacitated.hpp"
#include "covenum/capacity.hpp"
#include "covenum/connected_ds.hpp"
#include "covenum/connected_vc.hpp"
#include "covenum/errors.hpp"
#include "covenum/graph.hpp"
#include "covenum/hypergraph.hpp"
#include "covenum/min_valid_aug.hpp"
#include "covenum/oracle.hpp"
#include "covenum/properties.hpp"
#include "covenum/reductions.hpp"
#include "covenum/supergraph.hpp"
#include "covenum/vertex_set.hpp"

namespace py = pybind11;
using namespace covenum;

namespace {

VertexSet to_set(const std::vector<int>& ids) { return VertexSet(ids); }

std::vector<std::vector<int>> to_lists(const std::vector<VertexSet>& family) {
  std::vector<std::vector<int>> out;
  out.reserve(family.size());
  for (const VertexSet& s : family) out.push_back(s.ids());
  return out;
}

AugmentationBudget parse_budget(const std::string& mode) {
  if (mode == "degree") return AugmentationBudget::degree();
  if (mode.rfind("claw:", 0) == 0) {
    int d = std::stoi(mode.substr(5));
    if (d < 2) throw input_error("claw mode needs d >= 2");
    return AugmentationBudget::claw(d);
  }
  if (mode.rfind("budget:", 0) == 0) {
    int k = std::stoi(mode.substr(7));
    if (k < 0) throw input_error("budget must be non-negative");
    return AugmentationBudget::budget(k);
  }
  throw input_error("unknown mode: " + mode);
}

CapKind parse_kind(const std::string& kind) {
  if (kind == "vc") return CapKind::vertex_cover;
  if (kind == "ds") return CapKind::dominating_set;
  throw input_error("unknown capacitated kind: " + kind);
}

EnumerateOptions basic_options(std::uint64_t max_solutions) {
  EnumerateOptions opts;
  opts.max_solutions = max_solutions;
  return opts;
}

CapacityFn to_caps(const Graph& g, const std::vector<int>& caps) {
  if (static_cast<int>(caps.size()) != g.vertex_count())
    throw input_error("capacity list length must equal the vertex count");
  CapacityFn c;
  c.cap = caps;
  return c;
}

Hypergraph to_hypergraph(int n, const std::vector<std::vector<int>>& edges) {
  Hypergraph h;
  h.n = n;
  for (const auto& e : edges) h.edges.push_back(VertexSet(e));
  validate_hypergraph(h);
  return h;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "minimal connected and capacitated cover enumeration";

  py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
  py::register_exception<input_error>(m, "InputError", PyExc_ValueError);
  py::register_exception<contract_error>(m, "ContractError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def("add_edge", &Graph::add_edge, py::arg("u"), py::arg("v"))
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("m", &Graph::edge_count)
      .def("degree", &Graph::degree, py::arg("v"))
      .def("max_degree", &Graph::max_degree)
      .def("edges", [](const Graph& g) { return g.edges(); })
      .def("neighbors",
           [](const Graph& g, int v) {
             auto span = g.neighbors(v);
             return std::vector<int>(span.begin(), span.end());
           },
           py::arg("v"))
      .def("__repr__", [](const Graph& g) {
        std::ostringstream os;
        os << "Graph(n=" << g.vertex_count() << ", m=" << g.edge_count() << ")";
        return os.str();
      });

  m.def("parse_graph", &parse_graph_text, py::arg("text"),
        "Parse the 'n m' + edge-lines text format.");
  m.def("write_graph", [](const Graph& g) {
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
  });

  m.def(
      "connected_vertex_covers",
      [](const Graph& g, const std::string& mode, std::uint64_t max_solutions) {
        std::vector<VertexSet> family;
        if (mode == "quasipoly") {
          enumerate_cvc_quasipoly(
              g, [&](const VertexSet& x) { family.push_back(x); },
              basic_options(max_solutions));
        } else {
          enumerate_cvc(
              g, parse_budget(mode),
              [&](const VertexSet& x) { family.push_back(x); },
              basic_options(max_solutions));
        }
        return to_lists(family);
      },
      py::arg("g"), py::arg("mode") = "degree", py::arg("max_solutions") = 0,
      "All minimal connected vertex covers, in emission order.");

  m.def(
      "connected_dominating_sets",
      [](const Graph& g, std::uint64_t max_solutions) {
        std::vector<VertexSet> family;
        enumerate_cds(g, [&](const VertexSet& x) { family.push_back(x); },
                      basic_options(max_solutions));
        return to_lists(family);
      },
      py::arg("g"), py::arg("max_solutions") = 0,
      "All minimal connected dominating sets, in emission order.");

  m.def(
      "capacitated_covers",
      [](const Graph& g, const std::vector<int>& caps, const std::string& kind,
         std::uint64_t max_solutions) {
        std::vector<VertexSet> family;
        enumerate_capacitated(g, to_caps(g, caps), parse_kind(kind),
                              [&](const VertexSet& x) { family.push_back(x); },
                              basic_options(max_solutions));
        return to_lists(family);
      },
      py::arg("g"), py::arg("caps"), py::arg("kind") = "vc",
      py::arg("max_solutions") = 0,
      "All minimal capacitated vertex covers or dominating sets.");

  m.def(
      "connected_capacitated_covers",
      [](const Graph& g, const std::vector<int>& caps,
         std::uint64_t max_solutions) {
        std::vector<VertexSet> family;
        enumerate_connected_capacitated_vc(
            g, to_caps(g, caps),
            [&](const VertexSet& x) { family.push_back(x); },
            basic_options(max_solutions));
        return to_lists(family);
      },
      py::arg("g"), py::arg("caps"), py::arg("max_solutions") = 0,
      "Minimal vertex covers that are capacity-feasible and connected.");

  m.def(
      "cap_feasible",
      [](const Graph& g, const std::vector<int>& caps,
         const std::vector<int>& x,
         const std::string& kind) -> std::optional<py::dict> {
        auto w = cap_feasible(g, to_caps(g, caps), to_set(x), parse_kind(kind));
        if (!w) return std::nullopt;
        py::dict d;
        d["alpha"] = w->alpha;
        d["beta"] = w->beta;
        return d;
      },
      py::arg("g"), py::arg("caps"), py::arg("x"), py::arg("kind") = "vc",
      "Feasibility witness for x, or None.");

  m.def(
      "min_valid_aug",
      [](int nl, int nr, const std::vector<std::pair<int, int>>& edges) {
        ContractedBipartite inst =
            ContractedBipartite::from_bipartite(nl, nr, edges);
        return to_lists(min_valid_aug(inst));
      },
      py::arg("nl"), py::arg("nr"), py::arg("edges"),
      "Minimal valid augmentations of a connected bipartite instance.");

  m.def(
      "brute_minimal_family",
      [](const Graph& g, const std::string& what) {
        BasicProperty p;
        if (what == "vc")
          p = BasicProperty::vertex_cover;
        else if (what == "ds")
          p = BasicProperty::dominating_set;
        else if (what == "cvc")
          p = BasicProperty::connected_vertex_cover;
        else if (what == "cds")
          p = BasicProperty::connected_dominating_set;
        else
          throw input_error("unknown property: " + what);
        return to_lists(oracle::brute_minimal(
            g.vertex_count(),
            [&](const VertexSet& x) { return check_basic_property(g, x, p); }));
      },
      py::arg("g"), py::arg("what"),
      "Brute-force oracle family for vc/ds/cvc/cds, small graphs only.");

  m.def(
      "brute_transversals",
      [](int n, const std::vector<std::vector<int>>& edges) {
        return to_lists(oracle::brute_transversals(to_hypergraph(n, edges)));
      },
      py::arg("n"), py::arg("edges"),
      "All minimal transversals of a hypergraph, small instances only.");

  m.def(
      "build_reduction",
      [](int n, const std::vector<std::vector<int>>& edges,
         const std::string& kind) {
        ReductionInstance inst =
            build_reduction(to_hypergraph(n, edges), parse_reduction_kind(kind));
        py::dict d;
        std::ostringstream os;
        write_graph(os, inst.gadget);
        d["graph"] = os.str();
        d["forced"] = inst.forced.ids();
        d["pendants"] = inst.pendants.ids();
        d["original_n"] = inst.original_n;
        if (inst.capacities)
          d["capacities"] = inst.capacities->cap;
        else
          d["capacities"] = py::none();
        return d;
      },
      py::arg("n"), py::arg("edges"), py::arg("kind"),
      "Gadget graph and bookkeeping for a hardness reduction kind.");

  m.def(
      "verify_reduction",
      [](int n, const std::vector<std::vector<int>>& edges,
         const std::string& kind) {
        VerifyReport report =
            verify_reduction(to_hypergraph(n, edges), parse_reduction_kind(kind));
        return py::make_tuple(report.pass, report.lines);
      },
      py::arg("n"), py::arg("edges"), py::arg("kind"),
      "Certify one reduction kind against the transversal oracle.");
}
