#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "wdmst/commands.hpp"
#include "wdmst/ecst.hpp"
#include "wdmst/graph.hpp"
#include "wdmst/io.hpp"
#include "wdmst/oracle.hpp"
#include "wdmst/plan.hpp"

namespace py = pybind11;
using namespace wdmst;

namespace {

std::optional<SpanningTree> tree_or_none(TreeResult r) {
    if (!feasible(r)) return std::nullopt;
    return std::get<SpanningTree>(std::move(r));
}

// Python-side selection owns a copy of the edge ids so it never dangles.
struct PySelection {
    WhichTree chosen;
    double total_weight;
    std::vector<EdgeId> edge_ids;
};

PySelection to_py(const Selection& s) { return {s.chosen, s.total_weight, s.tree->edge_ids()}; }

WeaklyDynamicGraph make_graph(std::size_t n, const std::vector<std::tuple<VertexId, VertexId, double, bool>>& edges) {
    std::vector<EdgeSpec> specs;
    specs.reserve(edges.size());
    for (const auto& [u, v, w, unstable] : edges)
        specs.push_back({u, v, w, unstable ? EdgeKind::Unstable : EdgeKind::Stable});
    return build_graph(n, specs);
}

}  // namespace

PYBIND11_MODULE(_wdmst, m) {
    m.doc() = "Precomputed alternative minimum spanning trees for weakly dynamic graphs";

    py::register_exception<Error>(m, "WdmstError", PyExc_ValueError);

    py::enum_<EdgeKind>(m, "EdgeKind").value("Stable", EdgeKind::Stable).value("Unstable", EdgeKind::Unstable);
    py::enum_<OptimizationSense>(m, "Sense")
        .value("Minimize", OptimizationSense::Minimize)
        .value("Maximize", OptimizationSense::Maximize);
    py::enum_<WhichTree>(m, "WhichTree").value("Stable", WhichTree::Stable).value("Variable", WhichTree::Variable);

    py::class_<Edge>(m, "Edge")
        .def_readonly("id", &Edge::id)
        .def_readonly("u", &Edge::u)
        .def_readonly("v", &Edge::v)
        .def_readonly("weight", &Edge::weight)
        .def_readonly("kind", &Edge::kind)
        .def("__repr__", [](const Edge& e) {
            return "Edge(" + std::to_string(e.id) + ", " + std::to_string(e.u) + "-" + std::to_string(e.v) + ", " +
                   io::format_number(e.weight) + (e.unstable() ? ", unstable)" : ")");
        });

    py::class_<WeaklyDynamicGraph>(m, "Graph")
        .def(py::init(&make_graph), py::arg("n"), py::arg("edges"),
             "edges: list of (u, v, weight, unstable) tuples")
        .def_property_readonly("vertex_count", &WeaklyDynamicGraph::vertex_count)
        .def_property_readonly("edge_count", &WeaklyDynamicGraph::edge_count)
        .def_property_readonly("edges", &WeaklyDynamicGraph::edges)
        .def_property_readonly("unstable_ids", &WeaklyDynamicGraph::unstable_ids)
        .def("is_connected",
             [](const WeaklyDynamicGraph& g, const std::vector<EdgeId>& excluded) { return g.is_connected(excluded); },
             py::arg("excluded") = std::vector<EdgeId>{})
        .def("set_unstable_weight", &WeaklyDynamicGraph::set_unstable_weight, py::arg("edge"), py::arg("x"))
        .def("__eq__", [](const WeaklyDynamicGraph& a, const WeaklyDynamicGraph& b) { return a == b; });

    py::class_<SpanningTree>(m, "SpanningTree")
        .def_property_readonly("edge_ids", &SpanningTree::edge_ids)
        .def_property_readonly("stable_sum", &SpanningTree::stable_sum)
        .def_property_readonly("unstable_members", &SpanningTree::unstable_members)
        .def("total_weight", [](const SpanningTree& t, const WeaklyDynamicGraph& g) { return tree_total_weight(t, g); });

    m.def(
        "constrained_mst_kruskal",
        [](const WeaklyDynamicGraph& g, std::vector<EdgeId> mandatory, std::vector<EdgeId> forbidden,
           OptimizationSense sense) {
            return tree_or_none(constrained_mst_kruskal(g, {std::move(mandatory), std::move(forbidden)}, sense));
        },
        py::arg("graph"), py::arg("mandatory") = std::vector<EdgeId>{}, py::arg("forbidden") = std::vector<EdgeId>{},
        py::arg("sense") = OptimizationSense::Minimize, "Returns None when no constrained spanning tree exists.");
    m.def(
        "constrained_mst_prim",
        [](const WeaklyDynamicGraph& g, EdgeId seed, const std::vector<EdgeId>& forbidden, OptimizationSense sense) {
            return tree_or_none(constrained_mst_prim(g, seed, forbidden, sense));
        },
        py::arg("graph"), py::arg("seed_edge"), py::arg("forbidden") = std::vector<EdgeId>{},
        py::arg("sense") = OptimizationSense::Minimize);

    py::class_<EdgePlan>(m, "EdgePlan")
        .def_readonly("edge", &EdgePlan::edge)
        .def_readonly("d_s", &EdgePlan::d_s)
        .def_readonly("s_v", &EdgePlan::s_v)
        .def_readonly("cv", &EdgePlan::cv)
        .def_readonly("frozen_others", &EdgePlan::frozen_others)
        .def_property_readonly("mst_s", [](const EdgePlan& p) -> std::optional<SpanningTree> {
            if (!p.mst_s) return std::nullopt;
            return *p.mst_s;
        })
        .def_property_readonly("mst_v", [](const EdgePlan& p) { return *p.mst_v; })
        .def("__eq__", [](const EdgePlan& a, const EdgePlan& b) { return a == b; });

    py::class_<PySelection>(m, "Selection")
        .def_readonly("chosen", &PySelection::chosen)
        .def_readonly("total_weight", &PySelection::total_weight)
        .def_readonly("edge_ids", &PySelection::edge_ids);

    py::class_<PlanSet>(m, "PlanSet")
        .def_property_readonly("plans", &PlanSet::plans)
        .def_property_readonly("snapshot", &PlanSet::snapshot)
        .def("plan_for", &PlanSet::plan_for, py::return_value_policy::reference_internal)
        .def("__len__", &PlanSet::size)
        .def("__eq__", [](const PlanSet& a, const PlanSet& b) { return a == b; });

    py::class_<PiecewiseWeight>(m, "PiecewiseWeight")
        .def_readonly("intercept", &PiecewiseWeight::intercept)
        .def_readonly("breakpoint", &PiecewiseWeight::breakpoint)
        .def_readonly("plateau", &PiecewiseWeight::plateau)
        .def("__call__", &PiecewiseWeight::operator());

    m.def("precompute_plan", &precompute_plan, py::arg("graph"), py::arg("edge"),
          py::arg("frozen") = FrozenValues{});
    m.def("precompute_all", &precompute_all, py::arg("graph"));
    m.def("select_tree", [](const EdgePlan& p, double x) { return to_py(select_tree(p, x)); }, py::arg("plan"),
          py::arg("x"));
    m.def("weight_function", &weight_function, py::arg("plan"));
    m.def(
        "apply_change",
        [](const PlanSet& ps, WeaklyDynamicGraph& g, EdgeId e, double x) {
            ChangeResult r = apply_change(ps, g, e, x);
            return py::make_tuple(to_py(r.immediate), std::move(r.updated));
        },
        py::arg("plans"), py::arg("graph"), py::arg("edge"), py::arg("x"),
        "Returns (immediate selection, rebuilt plan set); mutates graph.");

    m.def("parse_graph", [](const std::string& text) { return io::parse_graph(text); }, py::arg("text"));
    m.def("format_graph", &io::format_graph, py::arg("graph"));
    m.def("write_plan", &io::write_plan, py::arg("plans"), py::arg("graph"));
    m.def("read_plan", [](const std::string& text, const WeaklyDynamicGraph& g) { return io::read_plan(text, g); },
          py::arg("text"), py::arg("graph"));
    m.def(
        "generate_graph",
        [](std::size_t n, std::size_t extra, std::size_t unstable, std::uint64_t seed) {
            return io::generate_graph({n, extra, unstable, seed});
        },
        py::arg("n"), py::arg("extra_edges") = 0, py::arg("unstable") = 0, py::arg("seed") = 1);

    auto oracle_mod = m.def_submodule("oracle", "Brute-force reference computations for small graphs");
    oracle_mod.def("brute_critical_value", py::overload_cast<const WeaklyDynamicGraph&, EdgeId>(
                                               &oracle::brute_critical_value),
                   py::arg("graph"), py::arg("edge"));
    oracle_mod.def("spanning_tree_count", &oracle::matrix_tree_count, py::arg("graph"));
    oracle_mod.def(
        "minimum_weight",
        [](const WeaklyDynamicGraph& g) { return oracle::catalog_minimum(oracle::enumerate_spanning_trees(g)); },
        py::arg("graph"));
}
