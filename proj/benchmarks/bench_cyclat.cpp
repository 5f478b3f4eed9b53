#include <benchmark/benchmark.h>

#include "cyclat/census.hpp"
#include "cyclat/cyclic.hpp"
#include "cyclat/polyring.hpp"
#include "cyclat/svp.hpp"

using namespace cyclat;

static void BM_Hnf(benchmark::State& state) {
  const IntVec a{7, -3, 2, 5, 1, -4};
  const IntMat m = circulant_matrix(a);
  for (auto _ : state) benchmark::DoNotOptimize(hnf_canonicalize(m));
}
BENCHMARK(BM_Hnf);

static void BM_Resultant(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<Int> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = Int(static_cast<long long>(i * 7 % 11) - 5);
  c[0] = 13;
  const IntVec a(c);
  for (auto _ : state) benchmark::DoNotOptimize(circulant_det_resultant(a));
}
BENCHMARK(BM_Resultant)->Arg(4)->Arg(8)->Arg(16);

static void BM_SuccessiveMinima(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<Int> c(n, Int(1));
  c[0] = Int(10 * static_cast<long long>(n) + 1);
  const Lattice lat = circulant_lattice(IntVec(c));
  for (auto _ : state) benchmark::DoNotOptimize(successive_minima(lat));
}
BENCHMARK(BM_SuccessiveMinima)->DenseRange(2, 6);

static void BM_Census(benchmark::State& state) {
  const Int R(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(census_circulant(3, R));
}
BENCHMARK(BM_Census)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_Dim2Brute(benchmark::State& state) {
  const Int R(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dim2_brute(R));
}
BENCHMARK(BM_Dim2Brute)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
