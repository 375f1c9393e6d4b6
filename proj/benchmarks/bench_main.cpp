#include <benchmark/benchmark.h>

#include "qtheta/decomp.hpp"
#include "qtheta/frobenius.hpp"
#include "qtheta/jacobi.hpp"

using namespace qtheta;

static void BM_QSeriesMul(benchmark::State& state) {
  const ExpRat prec(state.range(0));
  QSeries a = qs_inv(pochhammer(ExpRat(1), ExpRat(1), prec), prec);
  QSeries b = theta_series(6, 1, 1, prec);
  for (auto _ : state) benchmark::DoNotOptimize(qs_mul(a, b));
}
BENCHMARK(BM_QSeriesMul)->Arg(100)->Arg(400)->Arg(1000);

static void BM_HTableBuild(benchmark::State& state) {
  auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(h_table(k));
}
BENCHMARK(BM_HTableBuild)->DenseRange(4, 10, 2);

static void BM_CPhiRecursion(benchmark::State& state) {
  auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cphi_recursion(k, 200));
}
BENCHMARK(BM_CPhiRecursion)->Arg(2)->Arg(5)->Arg(8);

static void BM_ZetaProduct(benchmark::State& state) {
  auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(andrews_product(k, ExpRat(20)));
}
BENCHMARK(BM_ZetaProduct)->Arg(2)->Arg(4)->Arg(8);

static void BM_Enumerate(benchmark::State& state) {
  auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cphi_enumerate(k, 8));
}
BENCHMARK(BM_Enumerate)->DenseRange(1, 5);
BENCHMARK_MAIN();
