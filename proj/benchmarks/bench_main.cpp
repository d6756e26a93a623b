#include <benchmark/benchmark.h>

#include "mixnorm/mixed_norms.hpp"
#include "mixnorm/sampling.hpp"
#include "mixnorm/transform.hpp"

using namespace mixnorm;

static void BM_Fourier(benchmark::State& state) {
  const GridSpec g({1, 1}, static_cast<int>(state.range(0)), 16.0);
  const auto f = random_ensemble(g, 8, 1);
  for (auto _ : state) benchmark::DoNotOptimize(fourier(f));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(g.total_size()));
}
BENCHMARK(BM_Fourier)->Arg(96)->Arg(256)->Arg(1024);

static void BM_MixedNorm(benchmark::State& state) {
  const GridSpec g({1, 1}, static_cast<int>(state.range(0)), 16.0);
  const auto f = random_ensemble(g, 8, 2);
  const Exponent p = Exponent::parse("4/3");
  const Exponent s = Exponent::parse("3/2");
  for (auto _ : state) benchmark::DoNotOptimize(mixed_norm(f, p, s));
}
BENCHMARK(BM_MixedNorm)->Arg(256)->Arg(1024);

static void BM_RandomEnsemble(benchmark::State& state) {
  const GridSpec g({1, 1}, 256, 16.0);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(random_ensemble(g, static_cast<int>(state.range(0)), ++seed));
  }
}
BENCHMARK(BM_RandomEnsemble)->Arg(1)->Arg(8)->Arg(32);

BENCHMARK_MAIN();
