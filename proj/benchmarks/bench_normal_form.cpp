#include <benchmark/benchmark.h>

#include "cherednik/cherednik_algebra.hpp"
#include "cherednik/dunkl.hpp"

using namespace cherednik;

static void BM_DunklOnMonomials(benchmark::State& state) {
  const auto g = build_group(parse_group_spec("symmetric:3"));
  const DunklOperators t(g, CherednikParams::uniform(g, ExactScalar(1, 3)));
  const auto basis = monomials(g.rank(), static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const auto& m : basis) benchmark::DoNotOptimize(t.apply(0, Polynomial::monomial(m)));
  }
}
BENCHMARK(BM_DunklOnMonomials)->DenseRange(2, 8, 2);

static void BM_NormalFormProduct(benchmark::State& state) {
  const auto g = build_group(parse_group_spec("dihedral:4"));
  const CherednikAlgebra a(g, CherednikParams::uniform(g, ExactScalar(1, 5)));
  AlgebraElement xs = a.one(), xis = a.one();
  for (int d = 0; d < state.range(0); ++d) {
    xs = a.multiply(xs, a.x(d % 2));
    xis = a.multiply(xis, a.xi((d + 1) % 2));
  }
  for (auto _ : state) benchmark::DoNotOptimize(a.multiply(xis, xs));
}
BENCHMARK(BM_NormalFormProduct)->DenseRange(1, 4);

BENCHMARK_MAIN();
