#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bct/chain.hpp"
#include "bct/graph.hpp"
#include "bct/homology.hpp"
#include "bct/permutation.hpp"

namespace py = pybind11;
using namespace bct;

namespace {

std::vector<Word> chain_terms(const ChainF2& c) {
  return {c.terms().begin(), c.terms().end()};
}

CoxeterFamily coxeter_from_tag(const std::string& tag) {
  if (tag == "A") return CoxeterFamily::A;
  if (tag == "D") return CoxeterFamily::D;
  if (tag == "E") return CoxeterFamily::E;
  if (tag == "Atilde" || tag == "~A") return CoxeterFamily::ATilde;
  throw std::invalid_argument("unknown Coxeter family \"" + tag + "\"");
}

}  // namespace

PYBIND11_MODULE(bct, m) {
  m.doc() = "Boolean complexes of ordered graphs: boolean numbers, derangement "
            "sets and the derangement basis of the top homology.";

  py::class_<OrderedGraph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
             std::vector<Edge> es;
             for (auto [u, v] : edges) es.emplace_back(u, v);
             return OrderedGraph::on_vertices(n, es);
           }),
           py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{})
      .def_property_readonly("n", &OrderedGraph::size)
      .def_property_readonly("edges",
                             [](const OrderedGraph& g) {
                               return std::vector<std::pair<int, int>>(g.edges().begin(),
                                                                       g.edges().end());
                             })
      .def("neighbors", &OrderedGraph::neighbors, py::arg("vertex"))
      .def("has_edge", &OrderedGraph::has_edge, py::arg("u"), py::arg("v"))
      .def("__eq__", [](const OrderedGraph& a, const OrderedGraph& b) { return a == b; })
      .def("__repr__", [](const OrderedGraph& g) { return "Graph(" + graph_label(g) + ")"; });

  py::class_<CyclePermutation>(m, "Permutation")
      .def(py::init<std::vector<std::vector<int>>>(), py::arg("cycles"))
      .def(py::init(&parse_permutation), py::arg("text"))
      .def_property_readonly("cycles", &CyclePermutation::cycles)
      .def_property_readonly("support", &CyclePermutation::support)
      .def("is_derangement", &CyclePermutation::is_derangement)
      .def("cycle_count", &CyclePermutation::cycle_count)
      .def("image", &CyclePermutation::image, py::arg("v"))
      .def("preimage", &CyclePermutation::preimage, py::arg("v"))
      .def("__eq__",
           [](const CyclePermutation& a, const CyclePermutation& b) { return a == b; })
      .def("__lt__", [](const CyclePermutation& a, const CyclePermutation& b) { return a < b; })
      .def("__hash__", [](const CyclePermutation& w) { return py::hash(py::str(w.str())); })
      .def("__str__", &CyclePermutation::str)
      .def("__repr__",
           [](const CyclePermutation& w) { return "Permutation(\"" + w.str() + "\")"; });

  py::class_<ChainF2>(m, "Chain")
      .def_property_readonly("terms", &chain_terms)
      .def("is_zero", &ChainF2::is_zero)
      .def("term_count", &ChainF2::term_count)
      .def("__add__", [](const ChainF2& a, const ChainF2& b) { return a + b; })
      .def("__eq__", [](const ChainF2& a, const ChainF2& b) { return a == b; })
      .def("__str__", &ChainF2::str);

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("graph", &VerificationReport::graph)
      .def_readonly("beta", &VerificationReport::beta)
      .def_readonly("d_count_recursive", &VerificationReport::d_count_recursive)
      .def_readonly("d_count_criterion", &VerificationReport::d_count_criterion)
      .def_readonly("kernel_dim", &VerificationReport::kernel_dim)
      .def_readonly("basis_rank", &VerificationReport::basis_rank)
      .def_readonly("cycles_closed", &VerificationReport::cycles_closed)
      .def_readonly("passed", &VerificationReport::pass)
      .def_property_readonly("verdict", &VerificationReport::verdict)
      .def("__repr__", [](const VerificationReport& r) { return report_to_json(r); });

  m.def("parse_graph", &parse_graph, py::arg("text"), "Graph from the text file format.");
  m.def("write_graph", &write_graph, py::arg("graph"));
  m.def(
      "make_family",
      [](const std::string& tag, int param) { return make_family(parse_family(tag), param); },
      py::arg("family"), py::arg("param"),
      "Named family: K, A, D, E, F, cycle or Atilde.");
  m.def("beta_recursive", &beta_recursive, py::arg("graph"));
  m.def("maximal_edge",
        [](const OrderedGraph& g) -> std::optional<std::pair<int, int>> {
          auto e = maximal_edge(g);
          if (!e) return std::nullopt;
          return std::make_pair(e->u, e->v);
        },
        py::arg("graph"));
  m.def("delete_edge",
        [](const OrderedGraph& g, int u, int v) { return delete_edge(g, Edge(u, v)); });
  m.def("contract_edge",
        [](const OrderedGraph& g, int u, int v) { return contract_edge(g, Edge(u, v)); });
  m.def("extract_edge",
        [](const OrderedGraph& g, int u, int v) { return extract_edge(g, Edge(u, v)); });
  m.def("disjoint_union", &disjoint_union);

  m.def("all_derangements", &all_derangements, py::arg("values"));
  m.def("canopy",
        [](const CyclePermutation& w, int t) {
          Canopy c = canopy(w, t);
          return std::make_pair(c.lambda, c.rho);
        },
        py::arg("w"), py::arg("t"), "Returns (lambda, rho).");
  m.def("is_graph_valid", &is_graph_valid, py::arg("graph"), py::arg("w"));
  m.def("derangements_recursive", &derangements_recursive, py::arg("graph"));
  m.def("derangements_by_criterion", &derangements_by_criterion, py::arg("graph"));
  m.def("cycle_count_histogram", &cycle_count_histogram, py::arg("derangements"));
  m.def("alternating_excedance_set", &alternating_excedance_set, py::arg("r"));
  m.def("valid_parsings", &valid_parsings, py::arg("letters"));
  m.def(
      "coxeter_derangement_set",
      [](const std::string& tag, int n) { return coxeter_derangement_set(coxeter_from_tag(tag), n); },
      py::arg("family"), py::arg("n"));

  m.def("normal_form", &normal_form, py::arg("word"), py::arg("graph"));
  m.def("cells_of_rank", &cells_of_rank, py::arg("graph"), py::arg("k"));
  m.def("differential", &differential, py::arg("chain"));
  m.def("collapse", &collapse, py::arg("chain"), py::arg("graph"));

  m.def("phi_complete", &phi_complete, py::arg("w"));
  m.def("phi_graph", &phi_graph, py::arg("w"), py::arg("graph"));
  m.def("kernel_dimension_top", &kernel_dimension_top, py::arg("graph"));
  m.def("verify_basis", &verify_basis, py::arg("graph"));
}
