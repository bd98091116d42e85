#include "wdmst/plan.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>

namespace wdmst {

namespace {

bool same_tree(const std::shared_ptr<const SpanningTree>& a, const std::shared_ptr<const SpanningTree>& b) {
    if (!a || !b) return !a && !b;
    return *a == *b;
}

FrozenValues without(const FrozenValues& values, EdgeId e) {
    FrozenValues out = values;
    out.erase(e);
    return out;
}

}  // namespace

bool operator==(const EdgePlan& a, const EdgePlan& b) {
    return a.edge == b.edge && same_tree(a.mst_s, b.mst_s) && a.d_s == b.d_s && same_tree(a.mst_v, b.mst_v) &&
           a.s_v == b.s_v && a.cv == b.cv && a.frozen_others == b.frozen_others;
}

const char* to_string(WhichTree which) { return which == WhichTree::Stable ? "stable" : "variable"; }

PlanSet::PlanSet(std::vector<EdgePlan> plans, FrozenValues snapshot)
    : plans_(std::move(plans)), snapshot_(std::move(snapshot)) {
    std::sort(plans_.begin(), plans_.end(), [](const EdgePlan& a, const EdgePlan& b) { return a.edge < b.edge; });
}

const EdgePlan& PlanSet::plan_for(EdgeId edge) const {
    auto it = std::lower_bound(plans_.begin(), plans_.end(), edge,
                               [](const EdgePlan& p, EdgeId id) { return p.edge < id; });
    if (it == plans_.end() || it->edge != edge)
        throw Error(ErrorCode::NotUnstable, "no plan for edge " + std::to_string(edge) + " (not an unstable edge)");
    return *it;
}

FrozenValues unstable_values(const WeaklyDynamicGraph& g) {
    FrozenValues values;
    for (EdgeId id : g.unstable_ids()) values.emplace(id, g.edge(id).weight);
    return values;
}

EdgePlan precompute_plan(const WeaklyDynamicGraph& g, EdgeId e, const FrozenValues& frozen) {
    if (!g.is_unstable(e)) throw Error(ErrorCode::NotUnstable, "edge " + std::to_string(e) + " is stable");

    for (const auto& [id, value] : frozen) {
        if (id == e || !g.is_unstable(id))
            throw Error(ErrorCode::FrozenIncomplete,
                        "frozen value given for edge " + std::to_string(id) + ", which is not another unstable edge");
    }
    WeaklyDynamicGraph fixed = g;
    for (EdgeId other : g.unstable_ids()) {
        if (other == e) continue;
        auto it = frozen.find(other);
        if (it == frozen.end())
            throw Error(ErrorCode::FrozenIncomplete, "no frozen value for unstable edge " + std::to_string(other));
        fixed.set_unstable_weight(other, it->second);
    }

    EdgePlan plan;
    plan.edge = e;
    plan.frozen_others = frozen;

    TreeResult stable = constrained_mst_kruskal(fixed, Constraints{{}, {e}});
    if (feasible(stable)) {
        auto tree = std::make_shared<const SpanningTree>(std::get<SpanningTree>(std::move(stable)));
        plan.d_s = tree_total_weight(*tree, fixed);
        plan.mst_s = std::move(tree);
    }

    TreeResult variable = constrained_mst_prim(fixed, e);
    // g is connected, so a tree through any single edge always exists.
    assert(feasible(variable));
    auto tree = std::make_shared<const SpanningTree>(std::get<SpanningTree>(std::move(variable)));
    plan.s_v = tree->stable_sum();
    for (EdgeId id : tree->unstable_members())
        if (id != e) plan.s_v += fixed.edge(id).weight;
    plan.mst_v = std::move(tree);

    plan.cv = plan.d_s - plan.s_v;
    return plan;
}

Selection select_tree(const EdgePlan& plan, double x) {
    if (x < plan.cv) return {WhichTree::Variable, plan.s_v + x, plan.mst_v.get()};
    // cv is +inf whenever mst_s is absent, so x >= cv implies it exists.
    assert(plan.mst_s);
    return {WhichTree::Stable, plan.d_s, plan.mst_s.get()};
}

PlanSet precompute_all(const WeaklyDynamicGraph& g) {
    FrozenValues snapshot = unstable_values(g);
    std::vector<EdgePlan> plans;
    plans.reserve(snapshot.size());
    for (const auto& [id, value] : snapshot) plans.push_back(precompute_plan(g, id, without(snapshot, id)));
    return PlanSet(std::move(plans), std::move(snapshot));
}

PlanSet rebuild_after_change(const PlanSet& plan_set, const WeaklyDynamicGraph& g, EdgeId changed) {
    if (!g.is_unstable(changed)) throw Error(ErrorCode::NotUnstable, "edge " + std::to_string(changed) + " is stable");
    FrozenValues snapshot = unstable_values(g);
    std::vector<EdgePlan> plans;
    plans.reserve(snapshot.size());
    for (const auto& [id, value] : snapshot) {
        FrozenValues others = without(snapshot, id);
        const EdgePlan& old = plan_set.plan_for(id);
        if (old.frozen_others == others)
            plans.push_back(old);
        else
            plans.push_back(precompute_plan(g, id, others));
    }
    return PlanSet(std::move(plans), std::move(snapshot));
}

ChangeResult apply_change(const PlanSet& plan_set, WeaklyDynamicGraph& g, EdgeId e, double new_x) {
    if (!g.is_unstable(e)) throw Error(ErrorCode::NotUnstable, "edge " + std::to_string(e) + " is stable");
    if (!std::isfinite(new_x)) throw Error(ErrorCode::NonFiniteWeight, "new value is not finite");
    if (plan_set.snapshot() != unstable_values(g))
        throw Error(ErrorCode::StalePlan, "plan set was computed for different unstable values");

    Selection immediate = select_tree(plan_set.plan_for(e), new_x);
    g.set_unstable_weight(e, new_x);
    return {std::move(immediate), rebuild_after_change(plan_set, g, e)};
}

PiecewiseWeight weight_function(const EdgePlan& plan) { return {plan.s_v, plan.cv, plan.d_s}; }

}  // namespace wdmst
