#include <benchmark/benchmark.h>

#include "swapnet/distance.hpp"
#include "swapnet/dynamics.hpp"
#include "swapnet/generators.hpp"
#include "swapnet/structural.hpp"
#include "swapnet/sum_swap.hpp"

namespace {

using namespace swapnet;

void BM_all_pairs_distances(benchmark::State& state) {
    Rng rng(1);
    const Graph g = random_connected_graph(static_cast<int>(state.range(0)), 0.05, rng);
    for (auto _ : state) benchmark::DoNotOptimize(all_pairs_distances(g));
}
BENCHMARK(BM_all_pairs_distances)->Arg(64)->Arg(256)->Arg(1024);

void BM_check_sse(benchmark::State& state) {
    Rng rng(2);
    const Graph g = random_connected_graph(static_cast<int>(state.range(0)), 0.2, rng);
    for (auto _ : state) benchmark::DoNotOptimize(check_sse(g));
}
BENCHMARK(BM_check_sse)->Arg(12)->Arg(24)->Arg(40);

void BM_difference_bound(benchmark::State& state) {
    Rng rng(3);
    const Graph g = random_connected_graph(static_cast<int>(state.range(0)), 0.3, rng);
    for (auto _ : state) benchmark::DoNotOptimize(check_difference_bound(g));
}
BENCHMARK(BM_difference_bound)->Arg(16)->Arg(40)->Arg(80);

void BM_better_response(benchmark::State& state) {
    Rng rng(4);
    const Graph g0 = random_connected_graph(static_cast<int>(state.range(0)), 0.1, rng);
    DynamicsConfig cfg;
    for (auto _ : state) benchmark::DoNotOptimize(run_better_response(g0, cfg));
}
BENCHMARK(BM_better_response)->Arg(10)->Arg(20)->Arg(30);

void BM_limited_query_run(benchmark::State& state) {
    Rng rng(5);
    const Graph g0 = random_connected_graph(10, 0.2, rng);
    DynamicsConfig cfg;
    cfg.mode = DynamicsMode::LimitedQuery;
    cfg.query_budget = static_cast<int>(state.range(0));
    cfg.silence_window = 1000;
    for (auto _ : state) benchmark::DoNotOptimize(run_limited_query(g0, cfg));
}
BENCHMARK(BM_limited_query_run)->Arg(1)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
