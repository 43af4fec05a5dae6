#include <benchmark/benchmark.h>

#include "transkit/series_u.hpp"

using namespace transkit;

static void BM_UEval(benchmark::State& state) {
  QbarEnumeration e;
  const UPoint w = UPoint::exact({1, mpq_class(1, 2)});
  const UPoint z = UPoint::exact({mpq_class(state.range(0)), mpq_class(1, 3)});
  const Float target = Float::pow2(-state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(u_eval(e, w, z, target));
}
BENCHMARK(BM_UEval)->Args({1, 100})->Args({1, 1000})->Args({5, 100})->Unit(benchmark::kMillisecond);

static void BM_UFiniteSum(benchmark::State& state) {
  QbarEnumeration e;
  const UPoint w = UPoint::exact(2);
  for (auto _ : state)
    benchmark::DoNotOptimize(u_finite_sum(e, w, static_cast<std::size_t>(state.range(0)), Precision(256)));
}
BENCHMARK(BM_UFiniteSum)->Arg(8)->Arg(64);
