#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "../support.hpp"
#include "wdmst/graph.hpp"

using namespace wdmst;
using namespace wdmst::testing;

namespace {

ErrorCode build_error(std::size_t n, std::vector<EdgeSpec> specs) {
    try {
        build_graph(n, specs);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("build_graph accepted an invalid graph");
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("build_graph: small graphs") {
    const EdgeSpec one[] = {{0, 1, 5.0, EdgeKind::Stable}};
    const auto g = build_graph(2, one);
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.is_connected());
    CHECK(g.unstable_ids().empty());

    const auto t = triangle();
    CHECK(t.unstable_ids() == std::vector<EdgeId>{2});
    CHECK(t.edge(2).weight == 10.0);
    for (EdgeId id = 0; id < 3; ++id) CHECK(t.edge(id).id == id);
}

TEST_CASE("build_graph: errors") {
    CHECK(build_error(3, {{0, 1, 1, EdgeKind::Stable}}) == ErrorCode::DisconnectedGraph);
    CHECK(build_error(2, {{1, 1, 1, EdgeKind::Stable}, {0, 1, 1, EdgeKind::Stable}}) == ErrorCode::SelfLoop);
    CHECK(build_error(2, {{0, 2, 1, EdgeKind::Stable}}) == ErrorCode::VertexOutOfRange);
    CHECK(build_error(2, {{0, 1, std::numeric_limits<double>::infinity(), EdgeKind::Stable}}) ==
          ErrorCode::NonFiniteWeight);
    CHECK(build_error(2, {{0, 1, std::nan(""), EdgeKind::Unstable}}) == ErrorCode::NonFiniteWeight);
    CHECK(build_error(0, {}) == ErrorCode::EmptyGraph);
}

TEST_CASE("build_graph: parallel edges allowed, single vertex trivially connected") {
    const EdgeSpec par[] = {{0, 1, 1, EdgeKind::Stable}, {1, 0, 2, EdgeKind::Unstable}};
    const auto g = build_graph(2, par);
    CHECK(g.incident(0).size() == 2);
    CHECK(build_graph(1, std::span<const EdgeSpec>{}).is_connected());
}

TEST_CASE("is_connected with exclusions") {
    const auto t = triangle();
    CHECK(t.is_connected());
    const EdgeId two[] = {2};
    CHECK(t.is_connected(two));

    const auto p = path3();
    const EdgeId bridge[] = {0};
    CHECK_FALSE(p.is_connected(bridge));

    const EdgeId bogus[] = {7};
    CHECK_THROWS_AS(p.is_connected(bogus), Error);
}

TEST_CASE("set_unstable_weight") {
    auto t = triangle();
    const auto before = t;
    t.set_unstable_weight(2, 7.5);
    CHECK(t.edge(2).weight == 7.5);

    // everything else untouched
    auto restored = t;
    restored.set_unstable_weight(2, before.edge(2).weight);
    CHECK(restored == before);

    try {
        t.set_unstable_weight(0, 9);
        FAIL("stable edge mutated");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotUnstable);
    }
    CHECK_THROWS_AS(t.set_unstable_weight(2, std::numeric_limits<double>::infinity()), Error);
    CHECK_THROWS_AS(t.set_unstable_weight(9, 1.0), Error);

    t.set_unstable_weight(2, 0.0);
    CHECK(t.edge(2).weight == 0.0);
    t.set_unstable_weight(2, -4.0);
    CHECK(t.edge(2).weight == -4.0);
}

TEST_CASE("DisjointSetUnion properties under random unions") {
    std::mt19937_64 rng(3);
    for (int round = 0; round < 50; ++round) {
        const std::size_t n = 1 + rng() % 40;
        DisjointSetUnion dsu(n);
        std::size_t merges = 0;
        for (int k = 0; k < 60; ++k) {
            const std::size_t a = rng() % n, b = rng() % n;
            const bool merged = dsu.unite(a, b);
            if (merged) ++merges;
            CHECK(dsu.find(a) == dsu.find(b));
            CHECK(dsu.components() == n - merges);
        }
        for (std::size_t a = 0; a < n; ++a) CHECK(dsu.find(dsu.find(a)) == dsu.find(a));
    }
}

TEST_CASE("build then is_connected always holds") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) CHECK(random_graph(rng).is_connected());
}
