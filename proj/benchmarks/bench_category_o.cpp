#include <benchmark/benchmark.h>

#include "cherednik/category_o.hpp"

using namespace cherednik;

static void BM_GramRanks(benchmark::State& state) {
  const auto g = build_group(parse_group_spec("symmetric:3"));
  const auto p = CherednikParams::uniform(g, ExactScalar(1, 3));
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    ContravariantTower tower(g, p, 0);
    for (int d = 0; d <= n; ++d) benchmark::DoNotOptimize(tower.rank(d));
  }
}
BENCHMARK(BM_GramRanks)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_SimpleCharacter(benchmark::State& state) {
  const auto g = build_group(parse_group_spec("dihedral:4"));
  const auto p = CherednikParams::uniform(g, ExactScalar(1, 4));
  for (auto _ : state) benchmark::DoNotOptimize(simple_character(g, p, 0, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SimpleCharacter)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
