#include <benchmark/benchmark.h>

#include "braidconf/braid.hpp"
#include "braidconf/sampling.hpp"

using namespace braidconf;

static void BM_B3NormalForm(benchmark::State& state) {
  Rng rng(3);
  BraidWord w = random_braid_word(rng, 3, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(b3_normal_form(w));
  }
}
BENCHMARK(BM_B3NormalForm)->Arg(16)->Arg(64)->Arg(256);

static void BM_GassnerSplit(benchmark::State& state) {
  Rng rng(4);
  BraidWord w = random_braid_word(rng, 4, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gassner_split(w));
  }
}
BENCHMARK(BM_GassnerSplit)->Arg(16)->Arg(32)->Arg(64);

static void BM_ArtinOracle(benchmark::State& state) {
  Rng rng(5);
  BraidWord w = random_braid_word(rng, 4, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(artin_action(w));
  }
}
BENCHMARK(BM_ArtinOracle)->Arg(16)->Arg(32)->Arg(64);

static void BM_PslNormalForm(benchmark::State& state) {
  Rng rng(6);
  UnimodularMatrix m = random_modular_word(rng, static_cast<int>(state.range(0))).evaluate();
  for (auto _ : state) {
    benchmark::DoNotOptimize(normal_form(m));
  }
}
BENCHMARK(BM_PslNormalForm)->Arg(16)->Arg(60);

BENCHMARK_MAIN();
