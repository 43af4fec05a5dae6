#include <benchmark/benchmark.h>

#include "transkit/qbar.hpp"

using namespace transkit;

static void BM_EnumerateFirst(benchmark::State& state) {
  for (auto _ : state) {
    QbarEnumeration e;
    benchmark::DoNotOptimize(e.at(static_cast<std::size_t>(state.range(0))));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EnumerateFirst)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_Approx(benchmark::State& state) {
  QbarEnumeration e;
  const auto& a = e.at(500);
  for (auto _ : state) benchmark::DoNotOptimize(approx_bits(a, state.range(0)));
}
BENCHMARK(BM_Approx)->Arg(256)->Arg(2048);
