#include "wdmst/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <numeric>
#include <ostream>

#include "wdmst/ecst.hpp"
#include "wdmst/oracle.hpp"

namespace wdmst::cli {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ns(Clock::time_point start, Clock::time_point stop) {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
}

double mean(const std::vector<std::int64_t>& xs) {
    if (xs.empty()) return 0.0;
    return static_cast<double>(std::accumulate(xs.begin(), xs.end(), std::int64_t{0})) /
           static_cast<double>(xs.size());
}

double median(std::vector<std::int64_t> xs) {
    if (xs.empty()) return 0.0;
    const std::size_t mid = xs.size() / 2;
    std::nth_element(xs.begin(), xs.begin() + mid, xs.end());
    if (xs.size() % 2 == 1) return static_cast<double>(xs[mid]);
    const auto upper = xs[mid];
    const auto lower = *std::max_element(xs.begin(), xs.begin() + mid);
    return (static_cast<double>(lower) + static_cast<double>(upper)) / 2.0;
}

int fail(std::ostream& err, const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
}

void print_ids(std::ostream& out, const std::vector<EdgeId>& ids) {
    for (std::size_t i = 0; i < ids.size(); ++i) out << (i ? " " : "") << ids[i];
}

const char* verdict(bool ok) { return ok ? "OK" : "FAIL"; }

}  // namespace

double SimulationReport::mean_selection_ns() const { return mean(selection_ns); }
double SimulationReport::median_selection_ns() const { return median(selection_ns); }
std::int64_t SimulationReport::max_selection_ns() const {
    return selection_ns.empty() ? 0 : *std::max_element(selection_ns.begin(), selection_ns.end());
}
double SimulationReport::mean_naive_ns() const { return mean(naive_ns); }
double SimulationReport::median_naive_ns() const { return median(naive_ns); }
double SimulationReport::mean_rebuild_ns() const { return mean(rebuild_ns); }
double SimulationReport::speedup() const {
    const double sel = median_selection_ns();
    if (naive_ns.empty() || selection_ns.empty()) return 0.0;
    return median_naive_ns() / std::max(sel, 1.0);
}

int precompute(const std::filesystem::path& graph_path, const std::filesystem::path& plan_path, std::ostream& out,
               std::ostream& err) {
    try {
        const WeaklyDynamicGraph g = io::load_graph(graph_path);
        const PlanSet plans = precompute_all(g);
        io::write_file(plan_path, io::write_plan(plans, g));
        for (const EdgePlan& p : plans.plans())
            out << "edge " << p.edge << ": d_s=" << io::format_number(p.d_s) << " s_v=" << io::format_number(p.s_v)
                << " cv=" << io::format_number(p.cv) << "\n";
        return kSuccess;
    } catch (const std::exception& e) {
        return fail(err, e);
    }
}

int query(const std::filesystem::path& plan_path, const std::filesystem::path& graph_path, EdgeId edge, double x,
          std::ostream& out, std::ostream& err) {
    try {
        if (!std::isfinite(x)) throw Error(ErrorCode::NonFiniteWeight, "x must be finite");
        const WeaklyDynamicGraph g = io::load_graph(graph_path);
        const PlanSet plans = io::read_plan(io::read_file(plan_path), g);
        const Selection sel = select_tree(plans.plan_for(edge), x);
        out << to_string(sel.chosen) << " " << io::format_number(sel.total_weight) << "\n";
        out << "edges: ";
        print_ids(out, sel.tree->edge_ids());
        out << "\n";
        return kSuccess;
    } catch (const std::exception& e) {
        return fail(err, e);
    }
}

SimulationReport simulate_events(PlanSet plans, WeaklyDynamicGraph g, const std::vector<io::Event>& events,
                                 bool compare_naive) {
    for (const io::Event& ev : events) {
        if (ev.edge >= g.edge_count() || !g.is_unstable(ev.edge))
            throw Error(ErrorCode::NotUnstable, "line " + std::to_string(ev.line) + ": edge " +
                                                    std::to_string(ev.edge) + " is not an unstable edge");
    }

    SimulationReport report;
    std::map<EdgeId, WhichTree> current;
    for (const EdgePlan& p : plans.plans()) current[p.edge] = select_tree(p, g.edge(p.edge).weight).chosen;

    volatile double sink = 0.0;
    if (!events.empty()) {
        // warm-up, excluded from the statistics
        sink = select_tree(plans.plan_for(events.front().edge), events.front().new_x).total_weight;
        if (compare_naive) {
            const TreeResult warm = constrained_mst_kruskal(g, Constraints{});
            sink = tree_total_weight(std::get<SpanningTree>(warm), g);
        }
    }

    for (const io::Event& ev : events) {
        const auto t0 = Clock::now();
        const Selection sel = select_tree(plans.plan_for(ev.edge), ev.new_x);
        const auto t1 = Clock::now();
        sink = sel.total_weight;
        report.selection_ns.push_back(elapsed_ns(t0, t1));

        if (sel.chosen != current[ev.edge]) ++report.switches;
        current[ev.edge] = sel.chosen;

        const auto t2 = Clock::now();
        ChangeResult change = apply_change(plans, g, ev.edge, ev.new_x);
        const auto t3 = Clock::now();
        report.rebuild_ns.push_back(elapsed_ns(t2, t3));
        plans = std::move(change.updated);

        if (compare_naive) {
            const auto t4 = Clock::now();
            const TreeResult naive = constrained_mst_kruskal(g, Constraints{});
            const auto t5 = Clock::now();
            report.naive_ns.push_back(elapsed_ns(t4, t5));
            if (tree_total_weight(std::get<SpanningTree>(naive), g) != sel.total_weight) ++report.naive_mismatches;
        }
        ++report.events;
    }
    (void)sink;
    return report;
}

void print_report(const SimulationReport& r, std::ostream& out) {
    out << "events: " << r.events << "\n";
    out << "tree switches: " << r.switches << "\n";
    out << "selection latency ns: mean=" << r.mean_selection_ns() << " median=" << r.median_selection_ns()
        << " max=" << r.max_selection_ns() << "\n";
    out << "rebuild latency ns: mean=" << r.mean_rebuild_ns() << "\n";
    if (!r.naive_ns.empty()) {
        out << "naive recompute latency ns: mean=" << r.mean_naive_ns() << " median=" << r.median_naive_ns() << "\n";
        out << "speedup (median naive / median selection): " << r.speedup() << "\n";
        out << "naive mismatches: " << r.naive_mismatches << "\n";
    }
}

int simulate(const std::filesystem::path& plan_path, const std::filesystem::path& graph_path,
             const std::filesystem::path& events_path, bool compare_naive, std::ostream& out, std::ostream& err) {
    try {
        WeaklyDynamicGraph g = io::load_graph(graph_path);
        PlanSet plans = io::read_plan(io::read_file(plan_path), g);
        const auto events = io::parse_events(io::read_file(events_path));
        print_report(simulate_events(std::move(plans), std::move(g), events, compare_naive), out);
        return kSuccess;
    } catch (const std::exception& e) {
        return fail(err, e);
    }
}

int generate(const io::GeneratorOptions& options, std::ostream& out, std::ostream& err) {
    try {
        out << io::generate_graph(options);
        return kSuccess;
    } catch (const std::exception& e) {
        return fail(err, e);
    }
}

std::size_t verify_graph(const WeaklyDynamicGraph& g, const VerifyOptions& options, std::ostream& out) {
    if (!(options.step > 0.0) || !(options.halfwidth >= 0.0) || !std::isfinite(options.halfwidth))
        throw Error(ErrorCode::InvalidArgument, "grid needs step > 0 and a finite halfwidth >= 0");

    const oracle::TreeCatalog catalog = oracle::enumerate_spanning_trees(g);
    const PlanSet plans = precompute_all(g);
    std::size_t failures = 0;
    auto check = [&](bool ok) {
        if (!ok) ++failures;
        return verdict(ok);
    };

    for (const EdgePlan& plan : plans.plans()) {
        out << "edge " << plan.edge << ":\n";
        const double oracle_cv = oracle::brute_critical_value(catalog, g, plan.edge);
        out << "cv: engine=" << io::format_number(plan.cv) << " oracle=" << io::format_number(oracle_cv) << " "
            << check(plan.cv == oracle_cv) << "\n";

        const double center = std::isfinite(plan.cv) ? plan.cv : g.edge(plan.edge).weight;
        std::vector<double> grid;
        const auto steps = static_cast<std::size_t>(std::floor(2.0 * options.halfwidth / options.step));
        for (std::size_t i = 0; i <= steps; ++i)
            grid.push_back(center - options.halfwidth + static_cast<double>(i) * options.step);
        if (std::find(grid.begin(), grid.end(), center) == grid.end()) grid.push_back(center);
        std::sort(grid.begin(), grid.end());

        WeaklyDynamicGraph at_x = g;
        for (double x : grid) {
            at_x.set_unstable_weight(plan.edge, x);
            const double best = oracle::catalog_minimum(oracle::reweigh(catalog, at_x));
            const Selection sel = select_tree(plan, x);
            const double actual = oracle::weight_of(sel.tree->edge_ids(), at_x);
            out << "  x=" << io::format_number(x) << " " << to_string(sel.chosen)
                << " engine=" << io::format_number(sel.total_weight) << " oracle=" << io::format_number(best) << " "
                << check(sel.total_weight == best && actual == best) << "\n";
        }

        if (plan.mst_s) {
            at_x.set_unstable_weight(plan.edge, plan.cv);
            const double best = oracle::catalog_minimum(oracle::reweigh(catalog, at_x));
            const double ws = oracle::weight_of(plan.mst_s->edge_ids(), at_x);
            const double wv = oracle::weight_of(plan.mst_v->edge_ids(), at_x);
            out << "  tie at x=cv: stable=" << io::format_number(ws) << " variable=" << io::format_number(wv)
                << " oracle=" << io::format_number(best) << " " << check(ws == best && wv == best) << "\n";
        }
    }
    return failures;
}

int verify(const std::filesystem::path& graph_path, const VerifyOptions& options, std::ostream& out,
           std::ostream& err) {
    try {
        const WeaklyDynamicGraph g = io::load_graph(graph_path);
        const std::size_t failures = verify_graph(g, options, out);
        out << "verify: " << (failures == 0 ? "all checks passed" : std::to_string(failures) + " failures") << "\n";
        return failures == 0 ? kSuccess : kVerificationFailed;
    } catch (const std::exception& e) {
        return fail(err, e);
    }
}

}  // namespace wdmst::cli
