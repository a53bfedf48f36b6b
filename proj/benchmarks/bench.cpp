#include <benchmark/benchmark.h>

#include "hochlift/corpus.hpp"
#include "hochlift/linalg.hpp"
#include "hochlift/weyl.hpp"

using namespace hochlift;

static void BM_Rref(benchmark::State& state) {
  Rng rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = random_matrix(rng, Field::prime(5), n, n);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(32)->Arg(128)->Arg(256);

static void BM_DecideLift(benchmark::State& state) {
  const auto l = logsymp_5_2_3();
  const auto f = y_to_ysq();
  for (auto _ : state) benchmark::DoNotOptimize(decide_lift(l, f));
}
BENCHMARK(BM_DecideLift);

static void BM_WeylMul(benchmark::State& state) {
  Rng rng(2);
  const auto deg = static_cast<std::uint32_t>(state.range(0));
  const auto a = random_weyl(rng, 2, 7, true, deg, 12);
  const auto b = random_weyl(rng, 2, 7, true, deg, 12);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_WeylMul)->Arg(4)->Arg(12);
BENCHMARK_MAIN();
