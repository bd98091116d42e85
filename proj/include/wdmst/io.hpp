#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "wdmst/graph.hpp"
#include "wdmst/plan.hpp"

namespace wdmst::io {

// Graph text format (DIMACS-like):
//
//   c free-form comment
//   p wdg <n> <num_edges>
//   e <u> <v> <w>      stable edge
//   u <u> <v> <x0>     unstable edge, initial value
//
// Edge ids follow edge-line order. Comments may appear anywhere.

/// Throws Error(SyntaxError) with the 1-based line number, or the build_graph
/// error prefixed with the offending line.
WeaklyDynamicGraph parse_graph(std::string_view text);
std::string format_graph(const WeaklyDynamicGraph& g);

/// Shortest round-trip decimal; "inf" / "-inf" for infinities.
std::string format_number(double value);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);
WeaklyDynamicGraph load_graph(const std::filesystem::path& path);

struct Fingerprint {
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
    std::uint64_t content_hash = 0;

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

/// FNV-1a over endpoints, kinds and weight bit patterns of every edge.
Fingerprint fingerprint(const WeaklyDynamicGraph& g);

std::string write_plan(const PlanSet& plans, const WeaklyDynamicGraph& g);

/// Throws Error(FingerprintMismatch) when the plan was written for another
/// graph, Error(SyntaxError) on malformed documents.
PlanSet read_plan(std::string_view json_text, const WeaklyDynamicGraph& g);

struct Event {
    std::uint64_t seq = 0;
    EdgeId edge = 0;
    double new_x = 0.0;
    std::size_t line = 0;
};

/// `<seq> <edge_id> <new_x>` per line, seq strictly increasing. Blank lines
/// and `c` comments are skipped. Edge validity is checked against the graph
/// by the caller.
std::vector<Event> parse_events(std::string_view text);

struct GeneratorOptions {
    std::size_t vertices = 2;
    std::size_t extra_edges = 0;
    std::size_t unstable = 0;
    std::uint64_t seed = 1;
};

/// Random spanning-tree backbone plus `extra_edges` random non-loop edges,
/// integer weights in [1, 10^6], `unstable` distinct edges marked unstable.
/// Deterministic for a fixed seed.
std::string generate_graph(const GeneratorOptions& options);

}  // namespace wdmst::io
