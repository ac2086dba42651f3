#include <benchmark/benchmark.h>

#include "signet/sbm.hpp"
#include "signet/spectral.hpp"

using namespace signet;

static void Eigendecompose(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const SignedNetwork X = gaussian_bias(n, 0.8, 0.4, 1);
    for (auto _ : state) {
        auto s = eigendecompose(X);
        benchmark::DoNotOptimize(s);
    }
    state.SetComplexityN(n);
}
BENCHMARK(Eigendecompose)->RangeMultiplier(2)->Range(16, 256)->Complexity();

static void BalanceEta(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const SignedNetwork X = gaussian_bias(n, 0.8, 0.4, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(balance_eta(X, 20, 1));
    }
}
BENCHMARK(BalanceEta)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
