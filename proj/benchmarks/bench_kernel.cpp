#include <benchmark/benchmark.h>

#include "transkit/ball.hpp"
#include "transkit/functions.hpp"
#include "transkit/roots.hpp"

using namespace transkit;

static void BM_ExpBall(benchmark::State& state) {
  const Precision prec(state.range(0));
  const BallComplex z = BallComplex::from_rational(mpq_class(7, 3), mpq_class(-5, 4), prec);
  for (auto _ : state) benchmark::DoNotOptimize(exp_ball(z, prec));
}
BENCHMARK(BM_ExpBall)->RangeMultiplier(4)->Range(64, 4096);

static void BM_MulBall(benchmark::State& state) {
  const Precision prec(state.range(0));
  const BallComplex a = BallComplex::from_rational(mpq_class(1, 3), mpq_class(2, 7), prec);
  const BallComplex b = BallComplex::from_rational(mpq_class(-9, 11), mpq_class(5, 13), prec);
  for (auto _ : state) benchmark::DoNotOptimize(mul(a, b, prec));
}
BENCHMARK(BM_MulBall)->RangeMultiplier(4)->Range(64, 4096);

static void BM_DoubleExp(benchmark::State& state) {
  const Precision prec(state.range(0));
  const BallComplex z = BallComplex::from_rational(mpq_class(1, 2), mpq_class(1, 3), prec);
  for (auto _ : state) benchmark::DoNotOptimize(eval_double_exp(z, prec));
}
BENCHMARK(BM_DoubleExp)->Arg(128)->Arg(1024);

static void BM_RootsOf(benchmark::State& state) {
  // z^d - z - 1
  std::vector<mpz_class> c(state.range(0) + 1, 0);
  c[0] = -1;
  c[1] = -1;
  c.back() = 1;
  const IntPolynomial p(c);
  for (auto _ : state) benchmark::DoNotOptimize(roots_of(p, Precision(256)));
}
BENCHMARK(BM_RootsOf)->DenseRange(2, 12, 5);
