#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace swapnet {

// One checked instance inside a criterion: an input graph, a run, or a
// (graph, move) batch, with its own verdict.
struct InstanceResult {
    std::string id;
    bool pass = true;
    std::string note;
};

struct CriterionOutcome {
    std::string name;
    bool pass = true;
    std::string summary;
    std::vector<InstanceResult> instances;
};

struct ExperimentReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<CriterionOutcome> criteria;
    double wall_seconds = 0;

    bool all_pass() const {
        for (const auto& c : criteria)
            if (!c.pass) return false;
        return true;
    }
};

// Knobs for the experiment suites; the defaults are the values the
// acceptance run uses.
struct ExperimentParams {
    std::uint64_t seed = 1729;

    // potential-exactness
    int exhaustive_max_n = 5;
    int random_pairs_per_n = 10000;
    std::vector<int> random_pair_sizes = {10, 20, 50};
    int oracle_family_graphs = 4000;  // n <= 7 family
    std::int64_t oracle_min_comparisons = 100000;

    // sse-structure / bounds-validation
    int sse_random_graphs = 500;
    int sse_max_n = 12;
    std::vector<int> vicinity_ks = {1, 2};

    // local-equilibrium-star
    int star_exhaustive_max_n = 6;
    int br_runs = 200;
    int br_max_n = 30;

    // limited-query-convergence
    int lq_n = 10;
    std::vector<int> lq_budgets = {1, 2, 4};
    int lq_runs_per_budget = 100;
};

// suite is one of: potential-exactness, sse-structure, local-equilibrium-star,
// limited-query-convergence, bounds-validation. Throws BadSpec otherwise.
ExperimentReport run_experiment(const std::string& suite, const ExperimentParams& params);

std::vector<std::string> experiment_suite_names();

}  // namespace swapnet
