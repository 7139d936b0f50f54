#include "cherednik/linalg.hpp"
#include "cherednik/simplicity.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace cherednik;

namespace {

DenseMatrix make_matrix(std::size_t n) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  DenseMatrix m(n, n + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= n; ++j) m.at(i, j) = Rational(num(rng), den(rng));
  return m;
}

void BM_RrefSerial(benchmark::State& state) {
  const auto base = make_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    DenseMatrix m = base;
    benchmark::DoNotOptimize(rref_serial(m, m.cols() - 1));
  }
}

void BM_RrefParallel(benchmark::State& state) {
  const auto base = make_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    DenseMatrix m = base;
    benchmark::DoNotOptimize(rref_parallel(m, m.cols() - 1));
  }
}

void BM_SweepSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(oracle_sweep_serial(static_cast<std::uint64_t>(state.range(0)), 1));
}

void BM_SweepParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(oracle_sweep_parallel(static_cast<std::uint64_t>(state.range(0)), 1));
}

}  // namespace

BENCHMARK(BM_RrefSerial)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_RrefParallel)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_SweepSerial)->Arg(1000)->Arg(10000);
BENCHMARK(BM_SweepParallel)->Arg(1000)->Arg(10000);

BENCHMARK_MAIN();
