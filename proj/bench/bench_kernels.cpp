// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "rigclique/closed_neighborhood.hpp"
#include "rigclique/experiments.hpp"
#include "rigclique/rig.hpp"

using namespace rigclique;

namespace {

LabelRepresentation sample(std::size_t n, std::size_t m, double p) {
    return sample_label_representation({n, m, p, {}, {}}, Seed{1}, 0);
}

void BM_InducedGraph(benchmark::State& state) {
    const auto rep = sample(static_cast<std::size_t>(state.range(0)), 100, 0.05);
    for (auto _ : state) benchmark::DoNotOptimize(induced_graph(rep));
}

void BM_InducedGraphSerial(benchmark::State& state) {
    const auto rep = sample(static_cast<std::size_t>(state.range(0)), 100, 0.05);
    for (auto _ : state) benchmark::DoNotOptimize(induced_graph_serial(rep));
}

void BM_PartitionHashed(benchmark::State& state) {
    const Graph g = induced_graph(sample(static_cast<std::size_t>(state.range(0)), 10, 0.15));
    for (auto _ : state) benchmark::DoNotOptimize(closed_neighborhood_partition(g));
}

void BM_PartitionPairwise(benchmark::State& state) {
    const Graph g = induced_graph(sample(static_cast<std::size_t>(state.range(0)), 10, 0.15));
    for (auto _ : state) benchmark::DoNotOptimize(closed_neighborhood_partition_pairwise(g));
}

ExperimentConfig trials_config(int jobs) {
    ExperimentConfig cfg;
    cfg.kind = ExperimentKind::single_label;
    cfg.params = preset_sl100().params;
    cfg.trials = 64;
    cfg.seed = Seed{1};
    cfg.jobs = jobs;
    return cfg;
}

void BM_Experiment(benchmark::State& state) {
    const auto cfg = trials_config(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(run_experiment(cfg));
}

void BM_ExperimentSerial(benchmark::State& state) {
    const auto cfg = trials_config(1);
    for (auto _ : state) benchmark::DoNotOptimize(run_experiment_serial(cfg));
}

} // namespace

BENCHMARK(BM_InducedGraph)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InducedGraphSerial)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PartitionHashed)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PartitionPairwise)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Experiment)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExperimentSerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
