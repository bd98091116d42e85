#pragma once

// Brute-force ground truth for desk-size graphs. Deliberately shares nothing
// with the constrained-MST and plan code beyond the graph types.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wdmst/graph.hpp"

namespace wdmst::oracle {

inline constexpr std::size_t kMaxEdges = 24;

struct CatalogTree {
    std::vector<EdgeId> edge_ids;  // ascending
    double weight = 0.0;           // at the graph's values when enumerated

    friend bool operator==(const CatalogTree&, const CatalogTree&) = default;
};

/// Every spanning tree of a graph, in lexicographic order of edge-id sets.
struct TreeCatalog {
    std::size_t vertex_count = 0;
    std::vector<CatalogTree> trees;
};

/// Checks all (n-1)-subsets of the edges. Throws Error(TooLarge) above
/// kMaxEdges edges.
TreeCatalog enumerate_spanning_trees(const WeaklyDynamicGraph& g);

/// Sum of the current weights of `ids` in g, in ascending id order.
double weight_of(std::span<const EdgeId> ids, const WeaklyDynamicGraph& g);

/// Recomputes every catalog weight against g's current values. g must be the
/// enumerated graph, possibly with different unstable values.
TreeCatalog reweigh(TreeCatalog catalog, const WeaklyDynamicGraph& g);

enum class Sense { Minimize, Maximize };

/// Extreme-weight tree containing all of `mandatory` and none of `forbidden`;
/// ties go to the lexicographically smallest edge set. nullopt if none.
std::optional<CatalogTree> brute_constrained_min(const TreeCatalog& catalog, std::span<const EdgeId> mandatory,
                                                 std::span<const EdgeId> forbidden, Sense sense = Sense::Minimize);

/// Minimum catalog weight (the MST weight at the catalog's values).
double catalog_minimum(const TreeCatalog& catalog);

/// A - B where A is the cheapest tree avoiding e and B the cheapest stable
/// part (everything but e) of a tree containing e. +inf when every tree uses e.
double brute_critical_value(const WeaklyDynamicGraph& g, EdgeId e);
double brute_critical_value(const TreeCatalog& catalog, const WeaklyDynamicGraph& g, EdgeId e);

/// Largest edge weight on the unique u-v path of the tree given by `tree_ids`.
double max_weight_on_tree_path(std::span<const EdgeId> tree_ids, const WeaklyDynamicGraph& g, VertexId u,
                               VertexId v);

/// Number of spanning trees via the Matrix-Tree theorem (exact integer
/// Bareiss elimination on the reduced Laplacian; parallel edges count).
std::int64_t matrix_tree_count(const WeaklyDynamicGraph& g);

}  // namespace wdmst::oracle
