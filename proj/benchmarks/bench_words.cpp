#include <benchmark/benchmark.h>

#include "braidconf/f2dyn.hpp"
#include "braidconf/sampling.hpp"
#include "braidconf/words.hpp"

using namespace braidconf;

static void BM_EnumerateReduced(benchmark::State& state) {
  const int max_len = static_cast<int>(state.range(0));
  for (auto _ : state) {
    ReducedWordEnumerator en(2, max_len);
    std::size_t count = 0;
    while (en.advance()) ++count;
    benchmark::DoNotOptimize(count);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(2 * std::pow(3.0, max_len)));
}
BENCHMARK(BM_EnumerateReduced)->Arg(8)->Arg(10)->Arg(12);

static void BM_Concat(benchmark::State& state) {
  Rng rng(1);
  ReducedWord u = random_reduced_word(rng, 2, static_cast<int>(state.range(0)));
  ReducedWord v = random_reduced_word(rng, 2, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(concat(u, v));
  }
}
BENCHMARK(BM_Concat)->Arg(32)->Arg(256);

static void BM_ApplyF(benchmark::State& state) {
  Rng rng(2);
  ReducedWord w = random_reduced_word(rng, 2, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_f(w));
  }
}
BENCHMARK(BM_ApplyF)->Arg(16)->Arg(128);

static void BM_SolveEquation(benchmark::State& state) {
  const int max_len = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto sols = solve_equation(0, max_len);
    benchmark::DoNotOptimize(sols);
  }
}
BENCHMARK(BM_SolveEquation)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
