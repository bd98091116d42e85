#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "wdmst/graph.hpp"
#include "wdmst/io.hpp"
#include "wdmst/plan.hpp"

namespace wdmst::cli {

enum ExitCode : int { kSuccess = 0, kUsageError = 1, kVerificationFailed = 2 };

int precompute(const std::filesystem::path& graph_path, const std::filesystem::path& plan_path, std::ostream& out,
               std::ostream& err);

int query(const std::filesystem::path& plan_path, const std::filesystem::path& graph_path, EdgeId edge, double x,
          std::ostream& out, std::ostream& err);

struct SimulationReport {
    std::size_t events = 0;
    std::size_t switches = 0;
    std::vector<std::int64_t> selection_ns;
    std::vector<std::int64_t> rebuild_ns;
    std::vector<std::int64_t> naive_ns;  // empty unless compare_naive
    std::size_t naive_mismatches = 0;    // immediate weight != recomputed MST weight

    double mean_selection_ns() const;
    double median_selection_ns() const;
    std::int64_t max_selection_ns() const;
    double mean_naive_ns() const;
    double median_naive_ns() const;
    double mean_rebuild_ns() const;
    /// Median naive recompute over median selection; 0 without naive data.
    double speedup() const;
};

/// Replays events against an in-memory plan set. For each event the answer
/// is taken from the current plan (timed), then the graph is updated and the
/// plans rebuilt (timed separately). Throws Error(NotUnstable) naming the
/// event's line when it references a stable or unknown edge.
SimulationReport simulate_events(PlanSet plans, WeaklyDynamicGraph g, const std::vector<io::Event>& events,
                                 bool compare_naive);

void print_report(const SimulationReport& report, std::ostream& out);

int simulate(const std::filesystem::path& plan_path, const std::filesystem::path& graph_path,
             const std::filesystem::path& events_path, bool compare_naive, std::ostream& out, std::ostream& err);

int generate(const io::GeneratorOptions& options, std::ostream& out, std::ostream& err);

struct VerifyOptions {
    double halfwidth = 3.0;
    double step = 0.5;
};

int verify(const std::filesystem::path& graph_path, const VerifyOptions& options, std::ostream& out,
           std::ostream& err);

/// Same checks as `verify` on an in-memory graph; returns the number of
/// failed comparisons. Throws Error(TooLarge) past the oracle's size cap.
std::size_t verify_graph(const WeaklyDynamicGraph& g, const VerifyOptions& options, std::ostream& out);

}  // namespace wdmst::cli
