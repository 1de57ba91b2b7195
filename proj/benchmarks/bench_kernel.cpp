#include <benchmark/benchmark.h>

#include "tricomi/measure.hpp"
#include "tricomi/psi.hpp"
#include "tricomi/turanian.hpp"

using namespace tricomi;

static void BM_PsiQuadrature(benchmark::State& state) {
    const double x = static_cast<double>(state.range(0)) / 100.0;
    for (auto _ : state) benchmark::DoNotOptimize(psi_quadrature({1.5, -2.5, x}));
}
BENCHMARK(BM_PsiQuadrature)->Arg(1)->Arg(100)->Arg(5000);

static void BM_PsiConnection(benchmark::State& state) {
    const double x = static_cast<double>(state.range(0)) / 100.0;
    for (auto _ : state) benchmark::DoNotOptimize(psi_connection(1.5, -2.5, x));
}
BENCHMARK(BM_PsiConnection)->Arg(1)->Arg(100)->Arg(1000);

static void BM_PsiNegativeAxis(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(psi_negative_axis(2.0, -2.5, 3.0));
}
BENCHMARK(BM_PsiNegativeAxis);

static void BM_TuranianRatio(benchmark::State& state) {
    const auto kind = static_cast<TuranianKind>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(turanian_ratio(kind, {2.0, -2.5, 1.0}));
}
BENCHMARK(BM_TuranianRatio)->DenseRange(0, 2);

static void BM_PhiMoment(benchmark::State& state) {
    const auto d = WeightDensity::make(2.0, -2.5);
    for (auto _ : state) benchmark::DoNotOptimize(phi_moment(d, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_PhiMoment)->DenseRange(-2, 1)->Unit(benchmark::kMillisecond);

static void BM_StieltjesRatio(benchmark::State& state) {
    const auto d = WeightDensity::make(2.0, -2.5);
    for (auto _ : state) benchmark::DoNotOptimize(stieltjes_ratio(d, 1.0));
}
BENCHMARK(BM_StieltjesRatio)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
