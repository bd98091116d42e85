#pragma once

// Fixtures and seeded random instances shared by the unit and acceptance
// suites.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wdmst/graph.hpp"
#include "wdmst/io.hpp"

#ifndef WDMST_TEST_DATA_DIR
#define WDMST_TEST_DATA_DIR "tests/data"
#endif

namespace wdmst::testing {

inline std::string data_path(const std::string& name) { return std::string(WDMST_TEST_DATA_DIR) + "/" + name; }

inline WeaklyDynamicGraph fixture(const std::string& name) { return io::load_graph(data_path(name)); }

// (0,1)=1, (1,2)=2 stable; (0,2) unstable at x.
inline WeaklyDynamicGraph triangle(double x = 10.0, EdgeKind third = EdgeKind::Unstable) {
    const EdgeSpec specs[] = {{0, 1, 1, EdgeKind::Stable}, {1, 2, 2, EdgeKind::Stable}, {0, 2, x, third}};
    return build_graph(3, specs);
}

inline WeaklyDynamicGraph path3(double w01 = 4, double w12 = 9) {
    const EdgeSpec specs[] = {{0, 1, w01, EdgeKind::Stable}, {1, 2, w12, EdgeKind::Stable}};
    return build_graph(3, specs);
}

inline WeaklyDynamicGraph complete4(double w = 1) {
    std::vector<EdgeSpec> specs;
    for (VertexId a = 0; a < 4; ++a)
        for (VertexId b = a + 1; b < 4; ++b) specs.push_back({a, b, w, EdgeKind::Stable});
    return build_graph(4, specs);
}

struct RandomGraphOptions {
    std::size_t min_n = 3;
    std::size_t max_n = 8;
    std::size_t max_extra = 10;
    int min_weight = 1;
    int max_weight = 20;
    std::size_t unstable = 0;
    bool distinct_weights = false;
};

/// Connected random multigraph: random tree backbone plus extra edges.
inline std::vector<EdgeSpec> random_specs(std::mt19937_64& rng, const RandomGraphOptions& o, std::size_t& n_out) {
    auto pick = [&rng](std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    };
    const std::size_t n = pick(o.min_n, o.max_n);
    std::vector<EdgeSpec> specs;
    for (std::size_t v = 1; v < n; ++v)
        specs.push_back({static_cast<VertexId>(v), static_cast<VertexId>(pick(0, v - 1)), 0, EdgeKind::Stable});
    const std::size_t extra = pick(0, std::min(o.max_extra, 24 - (n - 1)));
    for (std::size_t k = 0; k < extra; ++k) {
        const auto a = static_cast<VertexId>(pick(0, n - 1));
        auto b = static_cast<VertexId>(pick(0, n - 2));
        if (b >= a) ++b;
        specs.push_back({a, b, 0, EdgeKind::Stable});
    }
    std::shuffle(specs.begin(), specs.end(), rng);

    if (o.distinct_weights) {
        std::vector<int> w(specs.size());
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = static_cast<int>(i) + 1;
        std::shuffle(w.begin(), w.end(), rng);
        for (std::size_t i = 0; i < specs.size(); ++i) specs[i].weight = w[i];
    } else {
        for (auto& s : specs)
            s.weight = std::uniform_int_distribution<int>(o.min_weight, o.max_weight)(rng);
    }

    std::vector<std::size_t> idx(specs.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    for (std::size_t k = 0; k < std::min(o.unstable, idx.size()); ++k) specs[idx[k]].kind = EdgeKind::Unstable;

    n_out = n;
    return specs;
}

inline WeaklyDynamicGraph random_graph(std::mt19937_64& rng, const RandomGraphOptions& o = {}) {
    std::size_t n = 0;
    auto specs = random_specs(rng, o, n);
    return build_graph(n, specs);
}

/// Random subset of `ids`, each kept with probability p.
inline std::vector<EdgeId> random_subset(std::mt19937_64& rng, const std::vector<EdgeId>& ids, double p) {
    std::vector<EdgeId> out;
    std::bernoulli_distribution keep(p);
    for (EdgeId id : ids)
        if (keep(rng)) out.push_back(id);
    return out;
}

}  // namespace wdmst::testing
