#include <benchmark/benchmark.h>

#include "transkit/mahler.hpp"

using namespace transkit;

static void BM_OmegaE(benchmark::State& state) {
  OmegaQuery q{Xi(NamedConstant::e), state.range(0), state.range(1)};
  q.workers = static_cast<unsigned>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(omega_search(q));
  state.SetItemsProcessed(state.iterations() * omega_search_size(q.n, q.H).get_si());
}
BENCHMARK(BM_OmegaE)
    ->Args({2, 20, 1})
    ->Args({3, 10, 1})
    ->Args({4, 12, 1})
    ->Args({4, 12, 4})
    ->UseRealTime()
    ->Unit(benchmark::kMillisecond);

static void BM_OmegaSqrt2(benchmark::State& state) {
  const OmegaQuery q{Xi(make_algebraic({-2, 0, 1}, 1)), state.range(0), state.range(1)};
  for (auto _ : state) benchmark::DoNotOptimize(omega_search(q));
}
BENCHMARK(BM_OmegaSqrt2)->Args({2, 50})->Args({3, 10})->Unit(benchmark::kMillisecond);
