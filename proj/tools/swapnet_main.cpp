// swapnet: simulate and verify swap-based network creation games.
//
// Subcommands: generate, check-sse, check-local, analyze, dynamics,
// experiment. Exit codes: 0 success, 1 criterion/property failure,
// 2 usage or input errors. SWAPNET_SEED provides the default seed.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "swapnet/dynamics.hpp"
#include "swapnet/edgelist.hpp"
#include "swapnet/experiments.hpp"
#include "swapnet/generators.hpp"
#include "swapnet/serialize.hpp"
#include "swapnet/structural.hpp"
#include "swapnet/sum_swap.hpp"

namespace {

using namespace swapnet;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("SWAPNET_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw BadSpec("SWAPNET_SEED is not an unsigned integer");
        }
    }
    return 0;
}

SearchPolicy policy_from_string(const std::string& name) {
    if (name == "first") return SearchPolicy::First;
    if (name == "best") return SearchPolicy::Best;
    if (name == "random") return SearchPolicy::Random;
    throw BadSpec("unknown policy: " + name);
}

struct GenerateArgs {
    std::string family;
    int n = 10;
    double p = 0.5;
    int n1 = 3;
    int n2 = 3;
    int bridge_length = 1;
    std::optional<std::uint64_t> seed;
    std::string out_path;
    bool as_json = false;
};

int cmd_generate(const GenerateArgs& args) {
    GeneratorSpec spec;
    spec.family = family_from_string(args.family);
    spec.n = args.n;
    spec.p = args.p;
    spec.n1 = args.n1;
    spec.n2 = args.n2;
    spec.bridge_length = args.bridge_length;
    spec.seed = args.seed ? *args.seed : default_seed();
    const Graph g = generate(spec);
    if (!args.out_path.empty()) {
        write_edgelist_file(g, args.out_path);
        return 0;
    }
    if (args.as_json) std::cout << graph_json(g) << "\n";
    else write_edgelist(g, std::cout);
    return 0;
}

int cmd_check_sse(const std::string& path, bool exhaustive, bool as_json) {
    const Graph g = read_edgelist_file(path);
    const SseReport report = check_sse(g, exhaustive);
    if (as_json) {
        std::cout << sse_report_json(g, report, exhaustive) << "\n";
        return 0;
    }
    std::cout << "n=" << g.vertex_count() << " m=" << g.edge_count() << "\n";
    std::cout << "sum-swap equilibrium: " << (report.is_equilibrium ? "yes" : "no") << "\n";
    if (report.witness) {
        std::cout << "witness: player " << report.witness->move.player << " swaps "
                  << report.witness->move.removed << " -> " << report.witness->move.added
                  << " (delta " << to_string(report.witness->delta) << ")\n";
    }
    if (exhaustive) std::cout << "improving moves: " << report.all_witnesses.size() << "\n";
    std::cout << "costs:";
    for (ExtInt c : report.costs) std::cout << " " << to_string(c);
    std::cout << "\n";
    return 0;
}

int cmd_check_local(const std::string& path, bool as_json) {
    const Graph g = read_edgelist_file(path);
    const LocalEquilibriumReport report = check_local_equilibrium(g);
    if (as_json) {
        std::cout << local_report_json(g, report) << "\n";
        return 0;
    }
    std::cout << "local-cost equilibrium: " << (report.is_equilibrium ? "yes" : "no") << "\n";
    std::cout << "spanning star: " << (has_spanning_star(g) ? "yes" : "no") << "\n";
    std::cout << "potential: " << potential(g) << "\n";
    if (report.witness) {
        std::cout << "witness: player " << report.witness->move.player << " swaps "
                  << report.witness->move.removed << " -> " << report.witness->move.added
                  << " (delta " << report.witness->delta << ")\n";
    }
    std::cout << "profits:";
    for (std::int64_t p : report.profits) std::cout << " " << p;
    std::cout << "\n";
    return 0;
}

int cmd_analyze(const std::string& path, const std::vector<int>& ks, bool as_json) {
    const Graph g = read_edgelist_file(path);
    const AnalyzeReport report = analyze_graph(g, ks);
    const bool violation =
        report.sse &&
        !(report.difference_bound.all_satisfied && report.mean_difference.all_satisfied &&
          report.first_edge.all_satisfied && report.degree2_diameter &&
          std::all_of(report.vicinity.begin(), report.vicinity.end(),
                      [](const VicinityBoundEntry& e) { return e.satisfied; }) &&
          (!report.density || report.density->satisfied));
    if (as_json) {
        std::cout << analyze_report_json(report) << "\n";
    } else {
        std::cout << "sse: " << (report.sse ? "yes" : "no") << "\n";
        std::cout << "diameter: " << report.diam << "\n";
        std::cout << "difference bound: "
                  << (report.difference_bound.all_satisfied ? "satisfied" : "VIOLATED") << " ("
                  << report.difference_bound.pairs.size() << " pairs, "
                  << report.difference_bound.pairs_skipped << " skipped)\n";
        std::cout << "mean difference <= 3: "
                  << (report.mean_difference.all_satisfied ? "satisfied" : "VIOLATED");
        if (report.mean_difference.max_mean)
            std::cout << " (max " << report.mean_difference.max_mean->str() << ")";
        std::cout << "\n";
        std::cout << "first-edge redundancy: "
                  << (report.first_edge.all_satisfied ? "satisfied" : "VIOLATED") << " ("
                  << report.first_edge.violations.size() << " violations)\n";
        std::cout << "degree-2 diameter cap: "
                  << (report.degree2_diameter ? "satisfied" : "VIOLATED") << "\n";
        for (const VicinityBoundEntry& e : report.vicinity)
            std::cout << "vicinity bound k=" << e.k << ": diam " << report.diam
                      << " <= " << e.bound.str() << (e.satisfied ? "" : " VIOLATED") << "\n";
        if (report.density)
            std::cout << "density bound: diam " << report.diam << " <= "
                      << report.density->bound.str()
                      << (report.density->satisfied ? "" : " VIOLATED") << "\n";
        else
            std::cout << "density bound: n/a (min degree < 2)\n";
    }
    return violation ? 1 : 0;
}

struct DynamicsArgs {
    std::string path;
    std::string mode = "full";
    int c = 1;
    std::optional<std::uint64_t> seed;
    std::int64_t max_steps = 0;
    std::int64_t silence_window = 0;
    std::string policy = "best";
    std::string scheduler = "round-robin";
    std::string trace_path;
};

int cmd_dynamics(const DynamicsArgs& args) {
    const Graph g0 = read_edgelist_file(args.path);
    DynamicsConfig cfg;
    if (args.mode == "full") cfg.mode = DynamicsMode::FullKnowledge;
    else if (args.mode == "query") cfg.mode = DynamicsMode::LimitedQuery;
    else throw BadSpec("unknown mode: " + args.mode);
    cfg.query_budget = args.c;
    cfg.policy = policy_from_string(args.policy);
    if (args.scheduler == "round-robin") cfg.scheduler = Scheduler::RoundRobin;
    else if (args.scheduler == "uniform") cfg.scheduler = Scheduler::UniformRandom;
    else throw BadSpec("unknown scheduler: " + args.scheduler);
    cfg.seed = args.seed ? *args.seed : default_seed();
    cfg.step_limit = args.max_steps;
    cfg.silence_window = args.silence_window;

    const DynamicsTrace trace = cfg.mode == DynamicsMode::FullKnowledge
                                    ? run_better_response(g0, cfg)
                                    : run_limited_query(g0, cfg);
    if (!args.trace_path.empty()) {
        std::ofstream out(args.trace_path);
        if (!out) throw IoError("cannot open " + args.trace_path + " for writing");
        for (const DynamicsStep& step : trace.steps) out << trace_step_jsonl(step) << "\n";
    }
    std::cout << dynamics_summary_json(trace) << "\n";
    return 0;
}

struct ExperimentArgs {
    std::string suite;
    std::optional<std::uint64_t> seed;
    bool no_timings = false;
    std::string out_path;
};

int cmd_experiment(const ExperimentArgs& args) {
    ExperimentParams params;
    if (args.seed) params.seed = *args.seed;
    else if (std::getenv("SWAPNET_SEED")) params.seed = default_seed();
    const ExperimentReport report = run_experiment(args.suite, params);
    const std::string doc = experiment_report_json(report, !args.no_timings);
    if (!args.out_path.empty()) {
        std::ofstream out(args.out_path);
        if (!out) throw IoError("cannot open " + args.out_path + " for writing");
        out << doc << "\n";
    } else {
        std::cout << doc << "\n";
    }
    std::cerr << experiment_report_text(report);
    return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"swap-based network creation games: simulation and verification"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* generate_cmd = app.add_subcommand("generate", "generate a graph and print its edge list");
    generate_cmd
        ->add_option("family", gen.family,
                     "gnp | random-tree | path | cycle | star | complete | barbell")
        ->required();
    generate_cmd->add_option("--n", gen.n, "vertex count");
    generate_cmd->add_option("--p", gen.p, "gnp edge probability");
    generate_cmd->add_option("--n1", gen.n1, "barbell: first clique size");
    generate_cmd->add_option("--n2", gen.n2, "barbell: second clique size");
    generate_cmd->add_option("--bridge-length", gen.bridge_length, "barbell: path edges");
    generate_cmd->add_option("--seed", gen.seed, "RNG seed (default SWAPNET_SEED or 0)");
    generate_cmd->add_option("-o,--out", gen.out_path, "write edge list to this file");
    generate_cmd->add_flag("--json", gen.as_json, "print the graph as JSON");

    std::string sse_path;
    bool sse_exhaustive = false;
    bool sse_json = false;
    auto* sse_cmd = app.add_subcommand("check-sse", "detect a sum-swap equilibrium");
    sse_cmd->add_option("edgelist", sse_path, "edge-list file")->required();
    sse_cmd->add_flag("--exhaustive", sse_exhaustive, "list every improving move");
    sse_cmd->add_flag("--json", sse_json, "JSON output");

    std::string local_path;
    bool local_json = false;
    auto* local_cmd = app.add_subcommand("check-local", "detect a local-cost equilibrium");
    local_cmd->add_option("edgelist", local_path, "edge-list file")->required();
    local_cmd->add_flag("--json", local_json, "JSON output");

    std::string analyze_path;
    std::vector<int> analyze_ks{1, 2};
    bool analyze_json = false;
    auto* analyze_cmd =
        app.add_subcommand("analyze", "run every structural checker on a connected graph");
    analyze_cmd->add_option("edgelist", analyze_path, "edge-list file")->required();
    analyze_cmd->add_option("--k", analyze_ks, "vicinity radii (comma separated)")->delimiter(',');
    analyze_cmd->add_flag("--json", analyze_json, "JSON output");

    DynamicsArgs dyn;
    auto* dyn_cmd = app.add_subcommand("dynamics", "run better-response or limited-query dynamics");
    dyn_cmd->add_option("edgelist", dyn.path, "edge-list file")->required();
    dyn_cmd->add_option("--mode", dyn.mode, "full | query")->required();
    dyn_cmd->add_option("--c", dyn.c, "query budget (query mode)");
    dyn_cmd->add_option("--seed", dyn.seed, "RNG seed (default SWAPNET_SEED or 0)");
    dyn_cmd->add_option("--max-steps", dyn.max_steps, "step limit (0 = default)");
    dyn_cmd->add_option("--silence-window", dyn.silence_window,
                        "silent steps before stopping (0 = n^3)");
    dyn_cmd->add_option("--policy", dyn.policy, "first | best | random");
    dyn_cmd->add_option("--scheduler", dyn.scheduler, "round-robin | uniform (full mode)");
    dyn_cmd->add_option("--trace", dyn.trace_path, "write line-delimited JSON trace here");

    ExperimentArgs exp;
    auto* exp_cmd = app.add_subcommand("experiment", "run a verification suite");
    exp_cmd->add_option("suite", exp.suite,
                        "potential-exactness | sse-structure | local-equilibrium-star | "
                        "limited-query-convergence | bounds-validation")
        ->required();
    exp_cmd->add_option("--seed", exp.seed, "RNG seed (default SWAPNET_SEED or 0)");
    exp_cmd->add_flag("--no-timings", exp.no_timings, "omit wall-clock from the JSON report");
    exp_cmd->add_option("-o,--out", exp.out_path, "write the JSON report to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (generate_cmd->parsed()) return cmd_generate(gen);
        if (sse_cmd->parsed()) return cmd_check_sse(sse_path, sse_exhaustive, sse_json);
        if (local_cmd->parsed()) return cmd_check_local(local_path, local_json);
        if (analyze_cmd->parsed()) return cmd_analyze(analyze_path, analyze_ks, analyze_json);
        if (dyn_cmd->parsed()) return cmd_dynamics(dyn);
        if (exp_cmd->parsed()) return cmd_experiment(exp);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
