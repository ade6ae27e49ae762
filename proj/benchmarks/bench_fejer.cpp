#include <benchmark/benchmark.h>

#include "fejerprime/fejer_term.hpp"
#include "fejerprime/indicator.hpp"
#include "fejerprime/smooth.hpp"

// Microbenchmarks for the per-term representations and the full indicator
// scans. The indicator lanes set the complexity counter so
// --benchmark_enable_random_interleaving / Complexity() reports the fitted
// exponents (cosine polynomial ~ N, quotient and RPF ~ sqrt(N)).

namespace {

void BM_FejerCosinePoly(benchmark::State& state) {
    const std::int64_t i = state.range(0);
    double x = 1000.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fejer::fejer_cosine_poly(x, i));
        x += 1e-9;
    }
    state.SetComplexityN(i);
}
BENCHMARK(BM_FejerCosinePoly)->RangeMultiplier(4)->Range(8, 2048)->Complexity();

void BM_FejerQuotient(benchmark::State& state) {
    const std::int64_t i = state.range(0);
    double x = 1000.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fejer::fejer_sine_quotient(x, i));
        x += 1e-9;
    }
    state.SetComplexityN(i);
}
BENCHMARK(BM_FejerQuotient)->RangeMultiplier(4)->Range(8, 2048)->Complexity();

void BM_FejerRpf(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    double x = 1000.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fejer::fejer_rpf(x, 37, k));
        x += 1e-9;
    }
}
BENCHMARK(BM_FejerRpf)->Arg(0)->Arg(2)->Arg(16)->Arg(64);

void BM_IndicatorQuotient(benchmark::State& state) {
    const double x = static_cast<double>(state.range(0)) + 0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fejer::indicator_P(x).value);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_IndicatorQuotient)
    ->RangeMultiplier(10)
    ->Range(10000, 10000000)
    ->Complexity();

void BM_IndicatorCosinePoly(benchmark::State& state) {
    const double x = static_cast<double>(state.range(0)) + 0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            fejer::indicator_P(x, {fejer::EvalKind::cosine_poly}).value);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_IndicatorCosinePoly)
    ->RangeMultiplier(10)
    ->Range(10000, 1000000)
    ->Complexity();

void BM_IndicatorRpf(benchmark::State& state) {
    const double x = static_cast<double>(state.range(0)) + 0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fejer::indicator_P(x, {fejer::EvalKind::rpf, 2}).value);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_IndicatorRpf)->RangeMultiplier(10)->Range(10000, 10000000)->Complexity();

void BM_SmoothTau(benchmark::State& state) {
    const double x = static_cast<double>(state.range(0)) + 0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fejer::p_tau(x, 100.0).value);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SmoothTau)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

}  // namespace

BENCHMARK_MAIN();
