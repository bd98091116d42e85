#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "wdmst/ecst.hpp"
#include "wdmst/graph.hpp"

namespace wdmst {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Values of the other unstable edges, keyed by edge id.
using FrozenValues = std::map<EdgeId, double>;

/// Precomputed answer for one unstable edge e.
///
/// mst_s is the minimum spanning tree with e forbidden (weight d_s, constant
/// in x); mst_v is the minimum spanning tree with e mandatory (weight
/// s_v + x). Below the critical value cv = d_s - s_v the tree containing e is
/// optimal, at or above it the tree without e is. When e is a bridge there is
/// no mst_s and d_s = cv = +inf.
///
/// d_s and s_v include the other unstable edges at the values in
/// frozen_others. Trees are shared and immutable so selections can outlive a
/// rebuild of the plan set.
struct alignas(64) EdgePlan {
    // Everything select_tree and PlanSet::plan_for read sits in the first
    // cache line.
    double cv = kInfinity;
    double s_v = 0.0;
    double d_s = kInfinity;
    std::shared_ptr<const SpanningTree> mst_v;
    std::shared_ptr<const SpanningTree> mst_s;  // null when e is a bridge
    EdgeId edge = 0;

    FrozenValues frozen_others;

    bool has_stable_tree() const noexcept { return mst_s != nullptr; }

    friend bool operator==(const EdgePlan& a, const EdgePlan& b);
};

enum class WhichTree { Stable, Variable };

const char* to_string(WhichTree which);

/// `tree` points into the plan that produced the selection and stays valid
/// while that plan, or any plan set sharing its trees, is alive.
struct Selection {
    WhichTree chosen = WhichTree::Variable;
    double total_weight = 0.0;
    const SpanningTree* tree = nullptr;
};

/// One plan per unstable edge, ordered by edge id, plus the unstable values
/// the plans were computed against.
class PlanSet {
public:
    PlanSet() = default;
    PlanSet(std::vector<EdgePlan> plans, FrozenValues snapshot);

    const std::vector<EdgePlan>& plans() const noexcept { return plans_; }
    const FrozenValues& snapshot() const noexcept { return snapshot_; }
    std::size_t size() const noexcept { return plans_.size(); }

    /// Throws Error(NotUnstable) when no plan exists for `edge`.
    const EdgePlan& plan_for(EdgeId edge) const;

    friend bool operator==(const PlanSet&, const PlanSet&) = default;

private:
    std::vector<EdgePlan> plans_;
    FrozenValues snapshot_;
};

/// Current values of every unstable edge of g.
FrozenValues unstable_values(const WeaklyDynamicGraph& g);

/// Builds the plan for unstable edge `e` with every other unstable edge held
/// at the value given in `frozen`.
EdgePlan precompute_plan(const WeaklyDynamicGraph& g, EdgeId e, const FrozenValues& frozen);

/// Constant time; touches only the plan's scalars.
Selection select_tree(const EdgePlan& plan, double x);

PlanSet precompute_all(const WeaklyDynamicGraph& g);

/// Rebuilds plan_set after `changed` took its current value in g. The plan of
/// the changed edge itself depends only on the other edges and is reused.
PlanSet rebuild_after_change(const PlanSet& plan_set, const WeaklyDynamicGraph& g, EdgeId changed);

struct ChangeResult {
    Selection immediate;
    PlanSet updated;
};

/// Answers from the existing plan first, then mutates g and rebuilds.
/// Requires plan_set to be current for g (Error(StalePlan) otherwise). The
/// changed edge's plan is carried over, so `immediate.tree` is also owned by
/// `updated`.
ChangeResult apply_change(const PlanSet& plan_set, WeaklyDynamicGraph& g, EdgeId e, double new_x);

/// min(d_s, s_v + x) in closed form.
struct PiecewiseWeight {
    double intercept = 0.0;  // s_v; the slope left of the breakpoint is 1
    double breakpoint = kInfinity;
    double plateau = kInfinity;  // d_s

    double operator()(double x) const noexcept { return x < breakpoint ? intercept + x : plateau; }
};

PiecewiseWeight weight_function(const EdgePlan& plan);

}  // namespace wdmst
