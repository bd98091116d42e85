"""Precomputed alternative minimum spanning trees for weakly dynamic graphs."""

from ._wdmst import (
    Edge,
    EdgeKind,
    EdgePlan,
    Graph,
    PiecewiseWeight,
    PlanSet,
    Selection,
    Sense,
    SpanningTree,
    WdmstError,
    WhichTree,
    apply_change,
    constrained_mst_kruskal,
    constrained_mst_prim,
    format_graph,
    generate_graph,
    oracle,
    parse_graph,
    precompute_all,
    precompute_plan,
    read_plan,
    select_tree,
    weight_function,
    write_plan,
)

__all__ = [name for name in dir() if not name.startswith("_")]
