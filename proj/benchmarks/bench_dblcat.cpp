#include <benchmark/benchmark.h>

#include "dblcat/groth.hpp"
#include "dblcat/homology.hpp"
#include "dblcat/nerve.hpp"
#include "dblcat/pushout.hpp"
#include "dblcat/subdivision.hpp"

using namespace dblcat;

static void BM_Csd2Inclusion(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(csd2_inclusion(Shape::boundary(k)));
}
BENCHMARK(BM_Csd2Inclusion)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_WeaklySolid(benchmark::State& state) {
  const PosetInclusion inc = csd2_inclusion(Shape::boundary(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(is_weakly_solid(inc));
}
BENCHMARK(BM_WeaklySolid)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_NerveOfChain(benchmark::State& state) {
  auto c = share(chain_category(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(nerve(c, 4));
}
BENCHMARK(BM_NerveOfChain)->RangeMultiplier(2)->Range(2, 16);

static void BM_HomologyCsd2Nerve(benchmark::State& state) {
  const CategoryNerve n = nerve(share(csd2_poset(Shape::simplex(static_cast<int>(state.range(0)))).as_category()), 3);
  for (auto _ : state) benchmark::DoNotOptimize(betti(*n.sset));
}
BENCHMARK(BM_HomologyCsd2Nerve)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_DoublePushout(benchmark::State& state) {
  const DblSievePushoutSpec spec =
      identity_spec(chain_category(1), csd2_inclusion(Shape::boundary(static_cast<int>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(pushout_dbl_box_sieve(spec));
}
BENCHMARK(BM_DoublePushout)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

static void BM_SpineSource(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(spine_source(n));
}
BENCHMARK(BM_SpineSource)->DenseRange(1, 6);

BENCHMARK_MAIN();
