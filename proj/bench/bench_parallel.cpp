#include <benchmark/benchmark.h>

#include "bpbvd/compression.hpp"
#include "bpbvd/difftest.hpp"
#include "bpbvd/generators.hpp"
#include "bpbvd/oracle.hpp"

namespace {

using namespace bpbvd;

Instance dense_instance() { return Instance{random_graph(13, 0.45, 7), PClass::cycles_and_k2(), 4, 5}; }

void BM_BruteForceSerial(benchmark::State& state) {
    const Instance inst = dense_instance();
    for (auto _ : state) benchmark::DoNotOptimize(brute_force(inst));
}
BENCHMARK(BM_BruteForceSerial)->Unit(benchmark::kMillisecond);

void BM_BruteForceParallel(benchmark::State& state) {
    const Instance inst = dense_instance();
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_parallel(inst));
}
BENCHMARK(BM_BruteForceParallel)->Unit(benchmark::kMillisecond);

void BM_CompressionIntersections(benchmark::State& state) {
    const Graph g = random_graph(12, 0.5, 11);
    CompressionOptions opts;
    opts.parallel = state.range(0) != 0;
    for (auto _ : state) benchmark::DoNotOptimize(solve_cactus(g, 4, 5, opts));
}
BENCHMARK(BM_CompressionIntersections)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_DifftestPool(benchmark::State& state) {
    DifftestConfig cfg;
    cfg.trials = 40;
    cfg.n = 9;
    cfg.seed = 3;
    cfg.parallel = state.range(0) != 0;
    const auto solvers = default_solvers();
    for (auto _ : state) benchmark::DoNotOptimize(differential_run(cfg, solvers));
}
BENCHMARK(BM_DifftestPool)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
