#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wdmst/commands.hpp"

int main(int argc, char** argv) {
    namespace cli = wdmst::cli;

    CLI::App app{"Precomputed alternative minimum spanning trees for graphs with unstable edges"};
    app.require_subcommand(1);

    std::string graph_path, plan_path, events_path;

    auto* precompute = app.add_subcommand("precompute", "Build the plan set for every unstable edge");
    precompute->add_option("graph", graph_path, "Graph file")->required();
    precompute->add_option("-o,--out", plan_path, "Plan file to write")->required();

    wdmst::EdgeId edge = 0;
    double x = 0.0;
    auto* query = app.add_subcommand("query", "Select the minimum spanning tree for a new value");
    query->add_option("plan", plan_path, "Plan file")->required();
    query->add_option("graph", graph_path, "Graph file the plan was built from")->required();
    query->add_option("--edge", edge, "Unstable edge id")->required();
    query->add_option("--x", x, "New value of the edge")->required();

    bool compare_naive = false;
    auto* simulate = app.add_subcommand("simulate", "Replay weight-change events and report latencies");
    simulate->add_option("plan", plan_path, "Plan file")->required();
    simulate->add_option("graph", graph_path, "Graph file")->required();
    simulate->add_option("events", events_path, "Event file")->required();
    simulate->add_flag("--compare-naive", compare_naive, "Also time a from-scratch MST per event");

    wdmst::io::GeneratorOptions gen;
    auto* generate = app.add_subcommand("generate", "Write a random connected graph to stdout");
    generate->add_option("--n", gen.vertices, "Vertex count")->required();
    generate->add_option("--extra-edges", gen.extra_edges, "Edges beyond the spanning backbone");
    generate->add_option("--unstable", gen.unstable, "Number of unstable edges");
    generate->add_option("--seed", gen.seed, "Random seed");

    cli::VerifyOptions verify_opts;
    auto* verify = app.add_subcommand("verify", "Check the plans against brute-force enumeration");
    verify->add_option("graph", graph_path, "Graph file (at most 24 edges)")->required();
    verify->add_option("--halfwidth", verify_opts.halfwidth, "Grid half-width around cv");
    verify->add_option("--step", verify_opts.step, "Grid step");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? cli::kSuccess : cli::kUsageError;
    }

    if (*precompute) return cli::precompute(graph_path, plan_path, std::cout, std::cerr);
    if (*query) return cli::query(plan_path, graph_path, edge, x, std::cout, std::cerr);
    if (*simulate) return cli::simulate(plan_path, graph_path, events_path, compare_naive, std::cout, std::cerr);
    if (*generate) return cli::generate(gen, std::cout, std::cerr);
    if (*verify) return cli::verify(graph_path, verify_opts, std::cout, std::cerr);
    return cli::kUsageError;
}
