// bench_kernel.cpp — Microbenchmarks for the rate kernel and sweeps

#include <numbers>

#include <benchmark/benchmark.h>

#include "mirrorcoh/mirrorcoh.hpp"

using namespace mirrorcoh;

static void BM_ResponseFunctions(benchmark::State& state) {
    double z = 0.01;
    for (auto _ : state) {
        benchmark::DoNotOptimize(f_parallel(z) + f_perp(z));
        z = z < 50.0 ? z + 0.37 : 0.01;
    }
}
BENCHMARK(BM_ResponseFunctions);

static void BM_ImageSums(benchmark::State& state) {
    const double d = state.range(0) == 0 ? 1.5 * std::numbers::pi : 50.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(image_sums(d, 1.0, PolarizationWeights::isotropic()));
    }
}
BENCHMARK(BM_ImageSums)->Arg(0)->Arg(1);

static void BM_Sweep(benchmark::State& state) {
    SweepConfig cfg;
    cfg.geometry = DoubleMirror{1.5 * std::numbers::pi, 1.0};
    cfg.pol = PolarizationWeights::isotropic();
    cfg.n_bars = {0.0, 0.5, 2.0};
    for (auto _ : state) benchmark::DoNotOptimize(sweep_coherence(cfg));
}
BENCHMARK(BM_Sweep);

BENCHMARK_MAIN();
