#include <benchmark/benchmark.h>

#include "netsens/estimators.hpp"

using namespace netsens;

namespace {

const Graph& er_graph() {
    static const Graph g = erdos_renyi(100, 0.2, RngSeed{1, 0});
    return g;
}

void BM_Centrality(benchmark::State& state) {
    const auto measure = static_cast<Measure>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(compute_centrality(er_graph(), measure).scores);
    }
}

void BM_ApplyError(benchmark::State& state) {
    const auto phi = parse_mechanism_token("rm_edges_unif:0.3");
    std::uint64_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(apply_error(er_graph(), phi, RngSeed{2, i++}));
    }
}

void BM_ClassifyPairs(benchmark::State& state) {
    const auto a = degree_centrality(er_graph());
    const auto b = degree_centrality(apply_error(er_graph(),
                                                 parse_mechanism_token("rm_edges_unif:0.3"),
                                                 RngSeed{3, 0}));
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify_pairs(a, b));
    }
}

void BM_IterativeEstimate(benchmark::State& state) {
    EstimatorConfig cfg;
    cfg.inner_samples = static_cast<int>(state.range(0));
    cfg.seed = RngSeed{4, 0};
    const auto phi = parse_mechanism_token("rm_edges_unif:0.1");
    for (auto _ : state) {
        benchmark::DoNotOptimize(iterative_estimate(er_graph(), phi, Measure::degree, cfg));
    }
}

}  // namespace

BENCHMARK(BM_Centrality)
    ->DenseRange(0, 4)
    ->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ApplyError)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ClassifyPairs)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_IterativeEstimate)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
