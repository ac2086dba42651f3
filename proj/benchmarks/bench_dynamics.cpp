#include <benchmark/benchmark.h>

#include "signet/dynamics.hpp"
#include "signet/sbm.hpp"

using namespace signet;

static void RhsFull(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const SignedNetwork X = gaussian_bias(n, 0.8, 0.4, 1);
    const SignedNetwork XD = gaussian_bias(n, 0.8, 0.4, 2);
    const SignedNetwork XT(n);
    const ModelParams params = ModelParams::fromAlpha(1.0, 8.0, 0.01);
    for (auto _ : state) {
        auto r = rhs_full(X, XD, params, XT);
        benchmark::DoNotOptimize(r);
    }
    state.SetComplexityN(n);
}
BENCHMARK(RhsFull)->RangeMultiplier(2)->Range(16, 128)->Complexity();

static void IntegrateToPeace(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const SignedNetwork XD = gaussian_bias(n, 0.8, 0.4, 1);
    const ModelParams params = ModelParams::fromAlpha(1.0, 8.0, 0.002);
    SimConfig cfg;
    cfg.t_end = 50.0;
    cfg.record_stride = 50;
    cfg.blowup_threshold = default_blowup_threshold(params, XD);
    for (auto _ : state) {
        auto traj = integrate(XD, XD, params, {}, cfg);
        benchmark::DoNotOptimize(traj);
    }
}
BENCHMARK(IntegrateToPeace)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
