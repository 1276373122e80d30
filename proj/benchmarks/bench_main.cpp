#include <benchmark/benchmark.h>

#include "trisq/counts.hpp"
#include "trisq/decomposition.hpp"
#include "trisq/divisor.hpp"
#include "trisq/qseries.hpp"
#include "trisq/verify.hpp"

namespace {

void BM_SeriesProduct(benchmark::State& state) {
  const auto p = static_cast<std::size_t>(state.range(0));
  const trisq::ZSeries phi = trisq::phi_series<trisq::Integer>(p);
  for (auto _ : state) benchmark::DoNotOptimize(phi * phi);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SeriesProduct)->RangeMultiplier(2)->Range(256, 4096)->Complexity();

void BM_CountSeries(benchmark::State& state) {
  const auto p = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(trisq::count_series_z(4, 2, trisq::Variant::Odd, p));
}
BENCHMARK(BM_CountSeries)->Arg(1000)->Arg(5000);

void BM_Alpha(benchmark::State& state) {
  const auto p = trisq::FormParams::make(4, 2);
  std::uint64_t n = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(trisq::alpha(p, 8 * n + p.shift()));
    n = (n + 1) % 4096;
  }
}
BENCHMARK(BM_Alpha);

void BM_Sigma(benchmark::State& state) {
  std::uint64_t n = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(trisq::sigma(3, trisq::Character::MinusFour, trisq::Character::MinusThree, n));
    n = n % 100000 + 1;
  }
}
BENCHMARK(BM_Sigma);

void BM_RatioCheck(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        trisq::check_ratio_convergence({4, 2, trisq::LimitCase::I, std::nullopt}, static_cast<std::uint64_t>(state.range(0))));
  }
}
BENCHMARK(BM_RatioCheck)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
