#include "wdmst/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace wdmst::oracle {

namespace {

// Relabel-based component merge: quadratic, but n <= kMaxEdges + 1.
bool spans_as_tree(const std::vector<EdgeId>& ids, const WeaklyDynamicGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> label(n);
    std::iota(label.begin(), label.end(), std::size_t{0});
    for (EdgeId id : ids) {
        const Edge& e = g.edge(id);
        const std::size_t from = label[e.v];
        const std::size_t to = label[e.u];
        if (from == to) return false;
        for (auto& l : label)
            if (l == from) l = to;
    }
    return std::all_of(label.begin(), label.end(), [&](std::size_t l) { return l == label[0]; });
}

bool contains(const std::vector<EdgeId>& sorted, EdgeId id) {
    return std::binary_search(sorted.begin(), sorted.end(), id);
}

}  // namespace

TreeCatalog enumerate_spanning_trees(const WeaklyDynamicGraph& g) {
    const std::size_t m = g.edge_count();
    if (m > kMaxEdges)
        throw Error(ErrorCode::TooLarge, "oracle enumeration is capped at " + std::to_string(kMaxEdges) +
                                             " edges, graph has " + std::to_string(m));
    TreeCatalog catalog;
    catalog.vertex_count = g.vertex_count();
    const std::size_t k = g.vertex_count() - 1;
    if (k > m) return catalog;

    // Lexicographic k-combinations of 0..m-1.
    std::vector<EdgeId> pick(k);
    std::iota(pick.begin(), pick.end(), EdgeId{0});
    while (true) {
        if (spans_as_tree(pick, g)) catalog.trees.push_back({pick, weight_of(pick, g)});
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == m - k + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return catalog;
}

double weight_of(std::span<const EdgeId> ids, const WeaklyDynamicGraph& g) {
    double total = 0.0;
    for (EdgeId id : ids) total += g.edge(id).weight;
    return total;
}

TreeCatalog reweigh(TreeCatalog catalog, const WeaklyDynamicGraph& g) {
    for (auto& t : catalog.trees) t.weight = weight_of(t.edge_ids, g);
    return catalog;
}

std::optional<CatalogTree> brute_constrained_min(const TreeCatalog& catalog, std::span<const EdgeId> mandatory,
                                                 std::span<const EdgeId> forbidden, Sense sense) {
    const CatalogTree* best = nullptr;
    for (const auto& t : catalog.trees) {
        const bool ok = std::all_of(mandatory.begin(), mandatory.end(),
                                    [&](EdgeId id) { return contains(t.edge_ids, id); }) &&
                        std::none_of(forbidden.begin(), forbidden.end(),
                                     [&](EdgeId id) { return contains(t.edge_ids, id); });
        if (!ok) continue;
        // Catalog order is lexicographic, so strict comparison keeps the
        // smallest edge set among ties.
        if (!best || (sense == Sense::Minimize ? t.weight < best->weight : t.weight > best->weight)) best = &t;
    }
    if (!best) return std::nullopt;
    return *best;
}

double catalog_minimum(const TreeCatalog& catalog) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& t : catalog.trees) best = std::min(best, t.weight);
    return best;
}

double brute_critical_value(const WeaklyDynamicGraph& g, EdgeId e) {
    return brute_critical_value(enumerate_spanning_trees(g), g, e);
}

double brute_critical_value(const TreeCatalog& catalog, const WeaklyDynamicGraph& g, EdgeId e) {
    const double inf = std::numeric_limits<double>::infinity();
    double without_e = inf;
    double rest_with_e = inf;
    for (const auto& t : catalog.trees) {
        if (contains(t.edge_ids, e)) {
            double rest = 0.0;
            for (EdgeId id : t.edge_ids)
                if (id != e) rest += g.edge(id).weight;
            rest_with_e = std::min(rest_with_e, rest);
        } else {
            without_e = std::min(without_e, weight_of(t.edge_ids, g));
        }
    }
    if (without_e == inf) return inf;
    return without_e - rest_with_e;
}

double max_weight_on_tree_path(std::span<const EdgeId> tree_ids, const WeaklyDynamicGraph& g, VertexId u,
                               VertexId v) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<EdgeId>> adj(n);
    for (EdgeId id : tree_ids) {
        adj[g.edge(id).u].push_back(id);
        adj[g.edge(id).v].push_back(id);
    }
    // DFS from u recording the heaviest edge seen on the way to each vertex.
    const double unset = -std::numeric_limits<double>::infinity();
    std::vector<double> heaviest(n, unset);
    std::vector<bool> seen(n, false);
    std::vector<VertexId> stack{u};
    seen[u] = true;
    while (!stack.empty()) {
        const VertexId w = stack.back();
        stack.pop_back();
        for (EdgeId id : adj[w]) {
            const Edge& e = g.edge(id);
            const VertexId next = e.other(w);
            if (seen[next]) continue;
            seen[next] = true;
            heaviest[next] = std::max(heaviest[w], e.weight);
            stack.push_back(next);
        }
    }
    if (!seen[v]) throw Error(ErrorCode::InvalidArgument, "vertices are not connected in the given tree");
    return heaviest[v];
}

std::int64_t matrix_tree_count(const WeaklyDynamicGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 1) return 1;
    const std::size_t r = n - 1;
    // Laplacian with row/column 0 removed.
    std::vector<std::vector<__int128>> a(r, std::vector<__int128>(r, 0));
    for (const Edge& e : g.edges()) {
        if (e.u > 0) a[e.u - 1][e.u - 1] += 1;
        if (e.v > 0) a[e.v - 1][e.v - 1] += 1;
        if (e.u > 0 && e.v > 0) {
            a[e.u - 1][e.v - 1] -= 1;
            a[e.v - 1][e.u - 1] -= 1;
        }
    }
    // Bareiss fraction-free elimination; every division is exact.
    __int128 prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < r; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < r && a[p][k] == 0) ++p;
            if (p == r) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < r; ++i)
            for (std::size_t j = k + 1; j < r; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return static_cast<std::int64_t>(sign * a[r - 1][r - 1]);
}

}  // namespace wdmst::oracle
