#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "wdmst/graph.hpp"

namespace wdmst {

/// Mandatory (E+) and forbidden (E-) edge sets of an edge-constrained
/// spanning tree problem. The two sets must be disjoint.
struct Constraints {
    std::vector<EdgeId> mandatory;
    std::vector<EdgeId> forbidden;

    /// Throws Error(UnknownEdgeId) or Error(InvalidConstraints) when the sets
    /// reference edges outside g or overlap.
    void validate(const WeaklyDynamicGraph& g) const;
};

enum class OptimizationSense { Minimize, Maximize };

/// A spanning tree as a sorted set of edge ids. The stable part of the weight
/// is cached; unstable members are evaluated against the graph on demand.
class SpanningTree {
public:
    SpanningTree() = default;

    /// Throws Error(InvalidArgument) unless `ids` forms a spanning tree of g.
    static SpanningTree from_edges(const WeaklyDynamicGraph& g, std::vector<EdgeId> ids);

    const std::vector<EdgeId>& edge_ids() const noexcept { return edge_ids_; }
    double stable_sum() const noexcept { return stable_sum_; }
    const std::vector<EdgeId>& unstable_members() const noexcept { return unstable_members_; }
    bool contains(EdgeId id) const;

    friend bool operator==(const SpanningTree&, const SpanningTree&) = default;

private:
    std::vector<EdgeId> edge_ids_;
    double stable_sum_ = 0.0;
    std::vector<EdgeId> unstable_members_;
};

enum class Infeasibility : std::uint8_t {
    MandatoryCycle,       // E+ already contains a cycle
    InfeasibleForbidden,  // the graph without E- is disconnected
};

const char* to_string(Infeasibility reason);

using TreeResult = std::variant<SpanningTree, Infeasibility>;

inline bool feasible(const TreeResult& r) noexcept { return std::holds_alternative<SpanningTree>(r); }

/// Kruskal seeded with every mandatory edge; remaining non-forbidden edges are
/// scanned in (weight, id) order. Unstable edges count at their current weight.
TreeResult constrained_mst_kruskal(const WeaklyDynamicGraph& g, const Constraints& c,
                                   OptimizationSense sense = OptimizationSense::Minimize);

/// Prim grown from the two endpoints of a single mandatory edge.
TreeResult constrained_mst_prim(const WeaklyDynamicGraph& g, EdgeId seed_edge, std::span<const EdgeId> forbidden = {},
                                OptimizationSense sense = OptimizationSense::Minimize);

/// stable_sum plus the current weights of the tree's unstable members.
double tree_total_weight(const SpanningTree& t, const WeaklyDynamicGraph& g);

/// Number of constrained-MST computations run by this process. Used to check
/// that query paths never recompute a tree.
std::uint64_t constrained_mst_invocations() noexcept;

}  // namespace wdmst
