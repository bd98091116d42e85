#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wdmst {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

enum class EdgeKind : std::uint8_t { Stable, Unstable };

enum class ErrorCode {
    SelfLoop,
    VertexOutOfRange,
    NonFiniteWeight,
    DisconnectedGraph,
    EmptyGraph,
    UnknownEdgeId,
    NotUnstable,
    InvalidConstraints,
    FrozenIncomplete,
    StalePlan,
    TooLarge,
    SyntaxError,
    FingerprintMismatch,
    Io,
    InvalidArgument,
};

const char* to_string(ErrorCode code);

/// Every recoverable failure in the library is reported through this type.
/// Infeasible constrained-tree problems are NOT errors; see ecst.hpp.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

struct Edge {
    EdgeId id = 0;
    VertexId u = 0;
    VertexId v = 0;
    double weight = 0.0;
    EdgeKind kind = EdgeKind::Stable;

    bool unstable() const noexcept { return kind == EdgeKind::Unstable; }
    VertexId other(VertexId w) const noexcept { return w == u ? v : u; }

    friend bool operator==(const Edge&, const Edge&) = default;
};

struct EdgeSpec {
    VertexId u = 0;
    VertexId v = 0;
    double weight = 0.0;
    EdgeKind kind = EdgeKind::Stable;
};

/// Undirected multigraph whose edge weights are fixed except for a designated
/// set of unstable edges. Topology is frozen at construction; only the
/// weights of unstable edges may change afterwards.
class WeaklyDynamicGraph {
public:
    /// Edge ids are assigned densely in input order. Throws Error on a
    /// self-loop, out-of-range endpoint, non-finite weight or when the full
    /// edge set does not connect all n vertices.
    static WeaklyDynamicGraph build(std::size_t n, std::span<const EdgeSpec> specs);

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(EdgeId id) const;
    const std::vector<EdgeId>& unstable_ids() const noexcept { return unstable_ids_; }
    bool is_unstable(EdgeId id) const;

    /// Edge ids incident to vertex w (each parallel edge listed separately).
    std::span<const EdgeId> incident(VertexId w) const noexcept {
        return {incidence_.data() + offsets_[w], incidence_.data() + offsets_[w + 1]};
    }

    /// True iff the edges outside `excluded` connect all vertices.
    bool is_connected(std::span<const EdgeId> excluded = {}) const;

    void set_unstable_weight(EdgeId id, double new_x);

    friend bool operator==(const WeaklyDynamicGraph& a, const WeaklyDynamicGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_ && a.unstable_ids_ == b.unstable_ids_;
    }

private:
    WeaklyDynamicGraph() = default;

    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<EdgeId> unstable_ids_;
    // CSR incidence lists
    std::vector<std::size_t> offsets_;
    std::vector<EdgeId> incidence_;
};

inline WeaklyDynamicGraph build_graph(std::size_t n, std::span<const EdgeSpec> specs) {
    return WeaklyDynamicGraph::build(n, specs);
}

/// Union by rank with path halving.
class DisjointSetUnion {
public:
    explicit DisjointSetUnion(std::size_t n);

    std::size_t find(std::size_t a) noexcept;
    /// Returns true when a and b were in different sets.
    bool unite(std::size_t a, std::size_t b) noexcept;
    bool same(std::size_t a, std::size_t b) noexcept { return find(a) == find(b); }
    std::size_t components() const noexcept { return components_; }
    std::size_t size() const noexcept { return parent_.size(); }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::uint8_t> rank_;
    std::size_t components_;
};

}  // namespace wdmst
