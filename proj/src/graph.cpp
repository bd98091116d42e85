#include "wdmst/graph.hpp"

#include <cmath>
#include <numeric>

namespace wdmst {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::SelfLoop: return "SelfLoop";
        case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
        case ErrorCode::NonFiniteWeight: return "NonFiniteWeight";
        case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
        case ErrorCode::EmptyGraph: return "EmptyGraph";
        case ErrorCode::UnknownEdgeId: return "UnknownEdgeId";
        case ErrorCode::NotUnstable: return "NotUnstable";
        case ErrorCode::InvalidConstraints: return "InvalidConstraints";
        case ErrorCode::FrozenIncomplete: return "FrozenIncomplete";
        case ErrorCode::StalePlan: return "StalePlan";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::FingerprintMismatch: return "FingerprintMismatch";
        case ErrorCode::Io: return "Io";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

WeaklyDynamicGraph WeaklyDynamicGraph::build(std::size_t n, std::span<const EdgeSpec> specs) {
    if (n == 0) throw Error(ErrorCode::EmptyGraph, "graph needs at least one vertex");

    WeaklyDynamicGraph g;
    g.n_ = n;
    g.edges_.reserve(specs.size());
    std::vector<std::size_t> degree(n, 0);
    for (const EdgeSpec& s : specs) {
        const auto id = static_cast<EdgeId>(g.edges_.size());
        if (s.u >= n || s.v >= n)
            throw Error(ErrorCode::VertexOutOfRange,
                        "edge " + std::to_string(id) + ": endpoint out of range (" + std::to_string(s.u) +
                            ", " + std::to_string(s.v) + ") for n=" + std::to_string(n));
        if (s.u == s.v)
            throw Error(ErrorCode::SelfLoop,
                        "edge " + std::to_string(id) + ": self-loop at vertex " + std::to_string(s.u));
        if (!std::isfinite(s.weight))
            throw Error(ErrorCode::NonFiniteWeight, "edge " + std::to_string(id) + ": weight is not finite");
        g.edges_.push_back(Edge{id, s.u, s.v, s.weight, s.kind});
        if (s.kind == EdgeKind::Unstable) g.unstable_ids_.push_back(id);
        ++degree[s.u];
        ++degree[s.v];
    }

    g.offsets_.assign(n + 1, 0);
    std::partial_sum(degree.begin(), degree.end(), g.offsets_.begin() + 1);
    g.incidence_.resize(g.offsets_[n]);
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const Edge& e : g.edges_) {
        g.incidence_[fill[e.u]++] = e.id;
        g.incidence_[fill[e.v]++] = e.id;
    }

    if (!g.is_connected())
        throw Error(ErrorCode::DisconnectedGraph, "edges do not connect all " + std::to_string(n) + " vertices");
    return g;
}

const Edge& WeaklyDynamicGraph::edge(EdgeId id) const {
    if (id >= edges_.size()) throw Error(ErrorCode::UnknownEdgeId, "unknown edge id " + std::to_string(id));
    return edges_[id];
}

bool WeaklyDynamicGraph::is_unstable(EdgeId id) const { return edge(id).unstable(); }

bool WeaklyDynamicGraph::is_connected(std::span<const EdgeId> excluded) const {
    std::vector<bool> skip(edges_.size(), false);
    for (EdgeId id : excluded) {
        if (id >= edges_.size()) throw Error(ErrorCode::UnknownEdgeId, "unknown edge id " + std::to_string(id));
        skip[id] = true;
    }
    DisjointSetUnion dsu(n_);
    for (const Edge& e : edges_) {
        if (!skip[e.id] && dsu.unite(e.u, e.v) && dsu.components() == 1) return true;
    }
    return dsu.components() == 1;
}

void WeaklyDynamicGraph::set_unstable_weight(EdgeId id, double new_x) {
    Edge& e = edges_.at(edge(id).id);
    if (!e.unstable())
        throw Error(ErrorCode::NotUnstable, "edge " + std::to_string(id) + " is stable and cannot be reweighted");
    if (!std::isfinite(new_x))
        throw Error(ErrorCode::NonFiniteWeight, "edge " + std::to_string(id) + ": new value is not finite");
    e.weight = new_x;
}

DisjointSetUnion::DisjointSetUnion(std::size_t n) : parent_(n), rank_(n, 0), components_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t DisjointSetUnion::find(std::size_t a) noexcept {
    while (parent_[a] != a) {
        parent_[a] = parent_[parent_[a]];
        a = parent_[a];
    }
    return a;
}

bool DisjointSetUnion::unite(std::size_t a, std::size_t b) noexcept {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    --components_;
    return true;
}

}  // namespace wdmst
