#include "wdmst/ecst.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <queue>
#include <string>
#include <tuple>

namespace wdmst {

namespace {

std::atomic<std::uint64_t> g_invocations{0};

std::vector<EdgeId> sorted_unique(std::vector<EdgeId> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

double sense_key(const Edge& e, OptimizationSense sense) {
    return sense == OptimizationSense::Minimize ? e.weight : -e.weight;
}

}  // namespace

void Constraints::validate(const WeaklyDynamicGraph& g) const {
    for (EdgeId id : mandatory) g.edge(id);
    for (EdgeId id : forbidden) g.edge(id);
    const auto plus = sorted_unique(mandatory);
    const auto minus = sorted_unique(forbidden);
    std::vector<EdgeId> both;
    std::set_intersection(plus.begin(), plus.end(), minus.begin(), minus.end(), std::back_inserter(both));
    if (!both.empty())
        throw Error(ErrorCode::InvalidConstraints,
                    "edge " + std::to_string(both.front()) + " is both mandatory and forbidden");
}

SpanningTree SpanningTree::from_edges(const WeaklyDynamicGraph& g, std::vector<EdgeId> ids) {
    std::sort(ids.begin(), ids.end());
    if (ids.size() + 1 != g.vertex_count())
        throw Error(ErrorCode::InvalidArgument, "a spanning tree of " + std::to_string(g.vertex_count()) +
                                                    " vertices needs " + std::to_string(g.vertex_count() - 1) +
                                                    " edges, got " + std::to_string(ids.size()));
    DisjointSetUnion dsu(g.vertex_count());
    SpanningTree t;
    for (EdgeId id : ids) {
        const Edge& e = g.edge(id);
        if (!dsu.unite(e.u, e.v))
            throw Error(ErrorCode::InvalidArgument, "edge set contains a cycle through edge " + std::to_string(id));
        if (e.unstable())
            t.unstable_members_.push_back(id);
        else
            t.stable_sum_ += e.weight;
    }
    t.edge_ids_ = std::move(ids);
    return t;
}

bool SpanningTree::contains(EdgeId id) const { return std::binary_search(edge_ids_.begin(), edge_ids_.end(), id); }

const char* to_string(Infeasibility reason) {
    switch (reason) {
        case Infeasibility::MandatoryCycle: return "MandatoryCycle";
        case Infeasibility::InfeasibleForbidden: return "InfeasibleForbidden";
    }
    return "Unknown";
}

TreeResult constrained_mst_kruskal(const WeaklyDynamicGraph& g, const Constraints& c, OptimizationSense sense) {
    c.validate(g);
    g_invocations.fetch_add(1, std::memory_order_relaxed);

    const std::size_t n = g.vertex_count();
    const auto& edges = g.edges();
    std::vector<std::uint8_t> fixed(edges.size(), 0);  // 1 = mandatory, 2 = forbidden
    for (EdgeId id : c.forbidden) fixed[id] = 2;

    DisjointSetUnion dsu(n);
    std::vector<EdgeId> tree;
    tree.reserve(n - 1);
    for (EdgeId id : sorted_unique(c.mandatory)) {
        fixed[id] = 1;
        if (!dsu.unite(edges[id].u, edges[id].v)) return Infeasibility::MandatoryCycle;
        tree.push_back(id);
    }

    std::vector<EdgeId> order;
    order.reserve(edges.size());
    for (const Edge& e : edges)
        if (fixed[e.id] == 0) order.push_back(e.id);
    std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
        const double ka = sense_key(edges[a], sense);
        const double kb = sense_key(edges[b], sense);
        return ka < kb || (ka == kb && a < b);
    });

    for (EdgeId id : order) {
        if (dsu.components() == 1) break;
        if (dsu.unite(edges[id].u, edges[id].v)) tree.push_back(id);
    }
    if (dsu.components() != 1) return Infeasibility::InfeasibleForbidden;
    return SpanningTree::from_edges(g, std::move(tree));
}

TreeResult constrained_mst_prim(const WeaklyDynamicGraph& g, EdgeId seed_edge, std::span<const EdgeId> forbidden,
                                OptimizationSense sense) {
    Constraints c{{seed_edge}, {forbidden.begin(), forbidden.end()}};
    c.validate(g);
    g_invocations.fetch_add(1, std::memory_order_relaxed);

    const std::size_t n = g.vertex_count();
    const auto& edges = g.edges();
    std::vector<bool> banned(edges.size(), false);
    for (EdgeId id : forbidden) banned[id] = true;

    using Entry = std::tuple<double, EdgeId>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
    std::vector<bool> reached(n, false);
    std::vector<EdgeId> tree;
    tree.reserve(n - 1);

    auto push_frontier = [&](VertexId w) {
        for (EdgeId id : g.incident(w)) {
            const Edge& e = edges[id];
            if (!banned[id] && !reached[e.other(w)]) frontier.emplace(sense_key(e, sense), id);
        }
    };

    const Edge& seed = edges[seed_edge];
    tree.push_back(seed_edge);
    reached[seed.u] = reached[seed.v] = true;
    push_frontier(seed.u);
    push_frontier(seed.v);

    while (!frontier.empty() && tree.size() + 1 < n) {
        const EdgeId id = std::get<1>(frontier.top());
        frontier.pop();
        const Edge& e = edges[id];
        if (reached[e.u] && reached[e.v]) continue;
        tree.push_back(id);
        const VertexId next = reached[e.u] ? e.v : e.u;
        reached[next] = true;
        push_frontier(next);
    }
    if (tree.size() + 1 != n) return Infeasibility::InfeasibleForbidden;
    return SpanningTree::from_edges(g, std::move(tree));
}

double tree_total_weight(const SpanningTree& t, const WeaklyDynamicGraph& g) {
    double total = t.stable_sum();
    for (EdgeId id : t.unstable_members()) total += g.edge(id).weight;
    return total;
}

std::uint64_t constrained_mst_invocations() noexcept { return g_invocations.load(std::memory_order_relaxed); }

}  // namespace wdmst
