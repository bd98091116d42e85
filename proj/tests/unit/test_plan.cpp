#include <doctest.h>

#include <cmath>
#include <random>

#include "../support.hpp"
#include "wdmst/oracle.hpp"
#include "wdmst/plan.hpp"

using namespace wdmst;
using namespace wdmst::testing;

namespace {

EdgePlan scalar_plan(double d_s, double s_v) {
    // select_tree only needs the scalars and two distinct trees
    EdgePlan p;
    p.edge = 0;
    p.d_s = d_s;
    p.s_v = s_v;
    p.cv = d_s - s_v;
    p.mst_v = std::make_shared<const SpanningTree>();
    if (std::isfinite(d_s)) p.mst_s = std::make_shared<const SpanningTree>();
    return p;
}

}  // namespace

TEST_CASE("precompute_plan: triangle") {
    const auto g = triangle();
    const EdgePlan p = precompute_plan(g, 2, {});
    CHECK(p.d_s == 3);
    CHECK(p.s_v == 1);
    CHECK(p.cv == 2);
    REQUIRE(p.mst_s);
    CHECK(p.mst_s->edge_ids() == std::vector<EdgeId>{0, 1});
    CHECK(p.mst_v->edge_ids() == std::vector<EdgeId>{0, 2});
    CHECK(oracle::brute_critical_value(g, 2) == p.cv);
}

TEST_CASE("precompute_plan: worked example") {
    const auto g = fixture("worked_example.wdg");
    const EdgePlan p = precompute_plan(g, 10, {});
    CHECK(p.d_s == 40);
    CHECK(p.s_v == 32);
    CHECK(p.cv == 8);
    CHECK_FALSE(p.mst_s->contains(10));
    CHECK(p.mst_v->contains(10));
}

TEST_CASE("precompute_plan: bridge edge has no stable tree") {
    const EdgeSpec one[] = {{0, 1, 4, EdgeKind::Unstable}};
    const auto g = build_graph(2, one);
    const EdgePlan p = precompute_plan(g, 0, {});
    CHECK_FALSE(p.has_stable_tree());
    CHECK(std::isinf(p.d_s));
    CHECK(std::isinf(p.cv));
    CHECK(p.s_v == 0);
}

TEST_CASE("precompute_plan: errors") {
    const auto g = triangle();
    CHECK_THROWS_AS(precompute_plan(g, 0, {}), Error);

    RandomGraphOptions opts;
    opts.unstable = 2;
    std::mt19937_64 rng(1);
    const auto multi = random_graph(rng, opts);
    const EdgeId a = multi.unstable_ids()[0];
    const EdgeId b = multi.unstable_ids()[1];
    try {
        precompute_plan(multi, a, {});
        FAIL("missing frozen value accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::FrozenIncomplete);
    }
    CHECK_NOTHROW(precompute_plan(multi, a, {{b, 3.0}}));
    CHECK_THROWS_AS(precompute_plan(multi, a, {{b, 3.0}, {a, 1.0}}), Error);
}

TEST_CASE("select_tree: threshold rule") {
    const EdgePlan p = scalar_plan(40, 32);
    REQUIRE(p.cv == 8);

    auto s7 = select_tree(p, 7);
    CHECK(s7.chosen == WhichTree::Variable);
    CHECK(s7.total_weight == 39);
    CHECK(s7.tree == p.mst_v.get());

    auto s9 = select_tree(p, 9);
    CHECK(s9.chosen == WhichTree::Stable);
    CHECK(s9.total_weight == 40);

    auto s8 = select_tree(p, 8);
    CHECK(s8.chosen == WhichTree::Stable);
    CHECK(s8.total_weight == 40);
    CHECK(s8.total_weight == p.s_v + 8);

    const EdgePlan bridge = scalar_plan(kInfinity, 10);
    for (double x : {-1e9, 0.0, 1e6}) {
        auto s = select_tree(bridge, x);
        CHECK(s.chosen == WhichTree::Variable);
        CHECK(s.total_weight == 10 + x);
    }
}

TEST_CASE("weight_function") {
    const auto f = weight_function(scalar_plan(40, 32));
    CHECK(f.breakpoint == 8);
    for (double x = -5; x <= 20; x += 0.25) CHECK(f(x) == std::min(40.0, 32.0 + x));

    const auto b = weight_function(scalar_plan(kInfinity, 10));
    CHECK(b(123) == 133);

    CHECK(weight_function(precompute_plan(triangle(), 2, {})).breakpoint == 2);
}

TEST_CASE("weight_function shape: nondecreasing, concave, one breakpoint") {
    std::mt19937_64 rng(8);
    RandomGraphOptions opts;
    opts.unstable = 1;
    for (int i = 0; i < 100; ++i) {
        const auto g = random_graph(rng, opts);
        const auto plan = precompute_plan(g, g.unstable_ids()[0], {});
        const auto f = weight_function(plan);
        double prev = f(-50), prev_slope = 1.0;
        int slope_changes = 0;
        for (double x = -49.5; x <= 50; x += 0.5) {
            const double y = f(x);
            CHECK(y >= prev);
            CHECK(y == std::min(plan.d_s, plan.s_v + x));
            const double slope = (y - prev) / 0.5;
            CHECK(slope <= prev_slope);
            if (slope != prev_slope) ++slope_changes;
            prev = y;
            prev_slope = slope;
        }
        CHECK(slope_changes <= 1);
    }
}

TEST_CASE("precompute_all") {
    const EdgeSpec stable_only[] = {{0, 1, 1, EdgeKind::Stable}, {1, 2, 1, EdgeKind::Stable}};
    CHECK(precompute_all(build_graph(3, stable_only)).size() == 0);

    const auto single = precompute_all(triangle());
    REQUIRE(single.size() == 1);
    CHECK(single.plans()[0].frozen_others.empty());
    CHECK(single.snapshot() == FrozenValues{{2, 10.0}});
    CHECK_THROWS_AS(single.plan_for(0), Error);

    std::mt19937_64 rng(31);
    RandomGraphOptions opts;
    opts.unstable = 3;
    for (int i = 0; i < 40; ++i) {
        const auto g = random_graph(rng, opts);
        const auto ps = precompute_all(g);
        REQUIRE(ps.size() == 3);
        for (const EdgePlan& p : ps.plans()) {
            CHECK(p.frozen_others.size() == 2);
            for (const auto& [id, value] : p.frozen_others) CHECK(ps.snapshot().at(id) == value);
            CHECK(p.cv == oracle::brute_critical_value(g, p.edge));
            CHECK(p.mst_v->contains(p.edge));
            if (p.mst_s) CHECK_FALSE(p.mst_s->contains(p.edge));
        }
    }
}

TEST_CASE("apply_change: single edge keeps its plan") {
    auto g = fixture("worked_example.wdg");
    const PlanSet original = precompute_all(g);
    auto r1 = apply_change(original, g, 10, 5);
    CHECK(r1.immediate.chosen == WhichTree::Variable);
    CHECK(r1.immediate.total_weight == 37);
    auto r2 = apply_change(r1.updated, g, 10, 9);
    CHECK(r2.immediate.chosen == WhichTree::Stable);
    CHECK(r2.immediate.total_weight == 40);
    CHECK(g.edge(10).weight == 9);

    // trees and scalars never change; only the snapshot follows the graph
    const EdgePlan& before = original.plan_for(10);
    const EdgePlan& after = r2.updated.plan_for(10);
    CHECK(after == before);
    CHECK(r2.updated.snapshot() == FrozenValues{{10, 9.0}});
    // the immediate answer's tree is owned by the rebuilt plan set as well
    CHECK(r2.immediate.tree == r2.updated.plan_for(10).mst_s.get());
}

TEST_CASE("apply_change: no-op change and error paths") {
    auto g = triangle();
    const PlanSet ps = precompute_all(g);
    auto same = apply_change(ps, g, 2, 10);
    CHECK(same.updated == ps);
    CHECK(same.immediate.chosen == select_tree(ps.plan_for(2), 10).chosen);

    CHECK_THROWS_AS(apply_change(ps, g, 0, 1), Error);
    CHECK_THROWS_AS(apply_change(ps, g, 2, std::nan("")), Error);

    g.set_unstable_weight(2, 4);
    try {
        apply_change(ps, g, 2, 1);
        FAIL("stale plan accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::StalePlan);
    }
}

TEST_CASE("apply_change: multi-edge rebuild matches a fresh precompute and the oracle") {
    std::mt19937_64 rng(77);
    RandomGraphOptions opts;
    opts.unstable = 2;
    for (int i = 0; i < 40; ++i) {
        auto g = random_graph(rng, opts);
        PlanSet ps = precompute_all(g);
        const EdgeId a = g.unstable_ids()[0];
        const EdgeId b = g.unstable_ids()[1];
        const double new_x = static_cast<double>(rng() % 25);

        auto r = apply_change(ps, g, a, new_x);
        // the immediate answer is the true optimum after the change
        const auto catalog = oracle::enumerate_spanning_trees(g);
        CHECK(r.immediate.total_weight == oracle::catalog_minimum(catalog));
        CHECK(r.updated == precompute_all(g));
        CHECK(r.updated.plan_for(b).frozen_others.at(a) == new_x);
        CHECK(r.updated.plan_for(b).cv == oracle::brute_critical_value(catalog, g, b));
    }
}

TEST_CASE("nonnegative stable weights give nonnegative critical values") {
    std::mt19937_64 rng(123);
    RandomGraphOptions opts;
    opts.unstable = 1;
    opts.min_weight = 0;
    for (int i = 0; i < 200; ++i) {
        const auto g = random_graph(rng, opts);
        CHECK(precompute_plan(g, g.unstable_ids()[0], {}).cv >= 0);
    }
}
