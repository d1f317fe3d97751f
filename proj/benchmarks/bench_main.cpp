#include <benchmark/benchmark.h>

#include "peakpoly/families.hpp"
#include "peakpoly/perm_oracle.hpp"
#include "peakpoly/roots.hpp"
#include "peakpoly/series.hpp"

using namespace peakpoly;

static void BM_RTriangle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(r_triangle(n));
}
BENCHMARK(BM_RTriangle)->Arg(25)->Arg(100)->Arg(200);

static void BM_PeakDistribution(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const OracleConfig config{10, 7, static_cast<unsigned>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(distribution(n, Stat::kPk, config));
}
BENCHMARK(BM_PeakDistribution)->Args({8, 1})->Args({9, 1})->Args({9, 4})->Unit(benchmark::kMillisecond);

static void BM_SignedDistribution(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(signed_distribution(n, Stat::kAdes));
}
BENCHMARK(BM_SignedDistribution)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_SeriesMultiply(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  const TruncSeries a = TruncSeries::from_egf(eulerian_polys(static_cast<int>(order)), order);
  for (auto _ : state) benchmark::DoNotOptimize(a * a);
}
BENCHMARK(BM_SeriesMultiply)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_GfIdentity(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_gf(GfFamily::kR, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_GfIdentity)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_RootIsolation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_root_structure(n));
}
BENCHMARK(BM_RootIsolation)->Arg(10)->Arg(25)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
