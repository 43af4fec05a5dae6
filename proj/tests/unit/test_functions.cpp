#include <gtest/gtest.h>

#include "../support/near.hpp"
#include "transkit/checks.hpp"
#include "transkit/functions.hpp"
#include "transkit/poly.hpp"

using namespace transkit;
using oracle::near;
using oracle::ten_to;

namespace {

BallComplex point(const mpq_class& re, const mpq_class& im, long bits = 256) {
  return BallComplex::from_rational(re, im, Precision(bits));
}

mpz_class floor_q(const mpq_class& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace

TEST(Liouville, PartialSums) {
  const auto a1 = liouville_partial(1);
  EXPECT_EQ(a1.p, 1);
  EXPECT_EQ(a1.q, 10);
  const auto a3 = liouville_partial(3);
  EXPECT_EQ(a3.p, 110001);
  EXPECT_EQ(a3.q, 1000000);
  const auto a4 = liouville_partial(4);
  EXPECT_EQ(a4.q, ten_to(24));
  EXPECT_EQ(mpq_class(a4.p, a4.q), mpq_class(110001, 1000000) + ten_to(-24));
  EXPECT_THROW(liouville_partial(0), std::invalid_argument);
}

TEST(Liouville, TailBoundDominatesTail) {
  for (long m = 1; m <= 4; ++m) {
    // the next two terms of the tail
    const auto a = liouville_partial(m + 2), b = liouville_partial(m);
    const mpq_class tail_prefix = mpq_class(a.p, a.q) - mpq_class(b.p, b.q);
    EXPECT_LT(tail_prefix, liouville_tail_bound(m).to_rational());
    EXPECT_GE(liouville_tail_bound(m).to_rational(), 2 * ten_to(-static_cast<long>(factorial_exact(m + 1).get_si())));
  }
}

TEST(Liouville, Digits) {
  const BallReal l = liouville_constant(Float::pow2(-200));
  EXPECT_LE(l.rad(), Float::pow2(-200));
  EXPECT_TRUE(near(l, "0.110001000000000000000001", ten_to(-50)));
  // every point of the ball prints as 0.1100010...
  const mpq_class scale = ten_to(7);
  const mpz_class lo = floor_q(l.lower().to_rational() * scale), hi = floor_q(l.upper().to_rational() * scale);
  EXPECT_EQ(lo, 1100010);
  EXPECT_EQ(hi, 1100010);
}

TEST(Liouville, Witness) {
  for (long n = 1; n <= 6; ++n) {
    const auto w = liouville_witness(n);
    EXPECT_TRUE(w.holds) << n;
    EXPECT_GT(w.gap_lower, 0);
    EXPECT_LT(w.gap_upper, w.bound);
    EXPECT_GE(w.approx.m, n);
    // the true gap sits between the two bounds: check with a longer partial sum
    const auto longer = liouville_partial(w.approx.m + 2);
    const mpq_class gap = mpq_class(longer.p, longer.q) - mpq_class(w.approx.p, w.approx.q);
    EXPECT_LE(w.gap_lower, gap);
    EXPECT_LT(gap, w.gap_upper);
  }
  EXPECT_THROW(liouville_witness(0), std::invalid_argument);
}

TEST(Functions, AgainstReference) {
  const BallComplex z = point(mpq_class(1, 2), mpq_class(1, 3));
  const Precision prec(256);
  const mpq_class tol = ten_to(-45);
  EXPECT_TRUE(near(eval_f(z, prec), "5.7929738355237403302509551594924119193614459485633",
                   "2.0058377527719878237497941129935131975726644810147", tol));
  EXPECT_TRUE(near(eval_g(z, prec), "6.5381166254456876121213243529641689971741480048586",
                   "11.324350181082706053894986209197602697033833035841", tol));
  EXPECT_TRUE(near(eval_h(z, prec), "1.6679716172849470574221836526410755216038617571093",
                   "0.53945285626809527585342220826091341610624411159628", tol));
  EXPECT_TRUE(near(eval_double_exp(z, prec), "4.0747427614082426584497586475268475561961895862803",
                   "2.4394919573636219444733681153977771990520442111034", tol));
}

TEST(Functions, SpecialPoints) {
  const Precision prec(200);
  // g(i) = e^(1 + i pi) = -e
  const BallComplex gi = eval_g(point(0, 1), prec);
  EXPECT_TRUE(gi.re.contains(BallReal(neg(const_e(prec)))) || overlaps(gi.re, neg(const_e(prec))));
  EXPECT_TRUE(gi.im.contains_zero());
  // f(0) = 1 + e
  const BallComplex f0 = eval_f(BallComplex::exact(0), prec);
  EXPECT_TRUE(overlaps(f0.re, add(const_e(prec), mpz_class(1), prec)));
  EXPECT_TRUE(f0.im.contains_zero());
  // e^(e^0) = e
  EXPECT_TRUE(overlaps(eval_double_exp(BallComplex::exact(0), prec).re, const_e(prec)));
}

TEST(Functions, RadiusShrinksWithPrecision) {
  const BallComplex z = point(mpq_class(-7, 5), mpq_class(2, 3), 1024);
  for (auto fn : {eval_f, eval_g, eval_h, eval_double_exp}) {
    const BallComplex lo = fn(z, Precision(64)), hi = fn(z, Precision(256));
    EXPECT_LE(hi.max_rad(), lo.max_rad());
    EXPECT_TRUE(overlaps(lo, hi));
    EXPECT_LE(hi.max_rad(), Float::pow2(-230));
  }
}

TEST(Functions, BakerResidual) {
  Rng rng(11);
  for (int i = 0; i < 20; ++i) {
    const mpq_class re = rng.rational(30, 7), im = i % 3 == 0 ? mpq_class(0) : rng.rational(30, 7);
    const BallReal r = baker_identity_residual(point(re, im, 400), Precision(200));
    EXPECT_LE(r.upper().to_rational(), ten_to(-40)) << re << " " << im;
    EXPECT_TRUE(r.contains(0));
  }
}
