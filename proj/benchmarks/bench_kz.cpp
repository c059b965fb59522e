#include <cmath>

#include <benchmark/benchmark.h>

#include "cherednik/kz.hpp"

using namespace cherednik;

static void BM_BraidGeneratorTransport(benchmark::State& state) {
  const auto g = build_group(parse_group_spec("symmetric:3"));
  const auto conn = assemble_connection(g, CherednikParams::uniform(g, ExactScalar(1, 5)), 2);
  TransportOptions opt;
  opt.tol = std::pow(10.0L, -static_cast<long double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(braid_generator_monodromy(conn, braid_generators(conn)[0], opt));
}
BENCHMARK(BM_BraidGeneratorTransport)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_FullMonodromy(benchmark::State& state) {
  const auto g = build_group(parse_group_spec(state.range(0) == 0 ? "dihedral:4" : "symmetric:4"));
  const auto p = CherednikParams::uniform(g, ExactScalar(1, 3));
  for (auto _ : state) benchmark::DoNotOptimize(compute_monodromy(g, p, 1));
}
BENCHMARK(BM_FullMonodromy)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
