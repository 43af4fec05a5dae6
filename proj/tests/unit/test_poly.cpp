#include <gtest/gtest.h>

#include <random>

#include "transkit/errors.hpp"
#include "transkit/poly.hpp"

using namespace transkit;

namespace {

// Sum over all k-subsets, by bitmask.
mpq_class subset_sigma(const std::vector<mpq_class>& xs, long k) {
  mpq_class total = 0;
  const unsigned n = xs.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    mpq_class prod = 1;
    for (unsigned i = 0; i < n; ++i)
      if (mask & (1u << i)) prod *= xs[i];
    total += prod;
  }
  return total;
}

RatPolynomial rat(std::initializer_list<mpq_class> c) { return RatPolynomial(std::vector<mpq_class>(c)); }

}  // namespace

TEST(Poly, NormalForm) {
  EXPECT_TRUE(IntPolynomial({0, 0, 0}).is_zero());
  EXPECT_EQ(IntPolynomial({}).degree(), -1);
  EXPECT_EQ(IntPolynomial({1, 2, 0}).degree(), 1);
}

TEST(Poly, Height) {
  EXPECT_EQ(height(IntPolynomial{2, -1, 3}), 3);
  EXPECT_EQ(height(IntPolynomial{0, 1}), 1);
  EXPECT_EQ(height(IntPolynomial{-7}), 7);
  EXPECT_THROW(height(IntPolynomial{}), ZeroPolynomial);
}

TEST(Poly, Length) {
  EXPECT_EQ(length(IntPolynomial{2, -1, 3}), 6);
  EXPECT_EQ(length(IntPolynomial{}), 0);
  EXPECT_EQ(length(IntPolynomial{0, -1, 0, 0, 0, 1}), 2);
}

TEST(Poly, EvalBall) {
  const auto i = BallComplex(BallReal::exact(0), BallReal::exact(1));
  EXPECT_TRUE(eval_ball(IntPolynomial{1, 0, 1}, i, Precision(64)).contains_zero());
  const IntPolynomial cubic{-6, 11, -6, 1};
  const auto at4 = eval_ball(cubic, BallComplex::exact(4), Precision(64));
  // Oracle: exact rational Horner.
  EXPECT_EQ(cubic.evaluate(GaussianRational(4)), GaussianRational(6));
  EXPECT_TRUE(at4.re.contains(mpq_class(6)));
  const auto half = eval_ball(IntPolynomial{0, 1}, BallComplex::from_rational(mpq_class(1, 2), 0, Precision(64)),
                              Precision(64));
  EXPECT_TRUE(half.is_exact());
  EXPECT_TRUE(half.re.contains(mpq_class(1, 2)));
}

TEST(Poly, Sigma) {
  const std::vector<mpq_class> xs{1, 2, 3};
  EXPECT_EQ(sigma(xs, 1), 6);
  EXPECT_EQ(sigma(xs, 2), 11);
  EXPECT_EQ(sigma(xs, 3), 6);
  for (long k = 1; k <= 3; ++k) EXPECT_EQ(sigma(xs, k), subset_sigma(xs, k));
  const std::vector<mpq_class> zeros(5, 0);
  for (long k = 1; k <= 5; ++k) EXPECT_EQ(sigma(zeros, k), 0);
  const std::vector<mpq_class> ys{mpq_class(1, 2), -3, 7, mpq_class(-2, 5)};
  EXPECT_EQ(sigma(ys, 4), mpq_class(1, 2) * -3 * 7 * mpq_class(-2, 5));
  EXPECT_THROW(sigma(xs, 0), IndexOutOfRange);
  EXPECT_THROW(sigma(xs, 4), IndexOutOfRange);
}

TEST(Poly, SigmaBall) {
  std::vector<BallComplex> xs;
  for (long v : {1, 2, 3}) xs.push_back(BallComplex::exact(v));
  EXPECT_TRUE(sigma(xs, 2, Precision(64)).re.contains(mpq_class(11)));
  EXPECT_THROW(sigma(xs, 4, Precision(64)), IndexOutOfRange);
}

TEST(Poly, ExpandRoots) {
  const std::vector<mpq_class> xs{1, 2, 3};
  // Oracle: direct multiplication.
  const RatPolynomial direct = rat({-1, 1}) * rat({-2, 1}) * rat({-3, 1});
  EXPECT_EQ(expand_roots(xs), direct);
  EXPECT_EQ(expand_roots(xs), rat({-6, 11, -6, 1}));
  EXPECT_EQ(expand_roots(std::vector<mpq_class>{}), rat({1}));
  EXPECT_EQ(expand_roots(std::vector<mpq_class>{0}), rat({0, 1}));
}

TEST(Poly, Lemma6Construct) {
  EXPECT_EQ(lemma6_construct(std::vector<mpq_class>{1, 1}), rat({1, 2}));
  EXPECT_EQ(lemma6_construct(std::vector<mpq_class>{0, 1}), rat({0, 1}));
  EXPECT_EQ(lemma6_construct(std::vector<mpq_class>{1, 0, 0}), rat({1, 1, 1, 1}));
  EXPECT_THROW(lemma6_construct(std::vector<mpq_class>{1}), std::invalid_argument);
}

TEST(Poly, Lemma6ConstructMatchesDefinition) {
  // Oracle: product of factors built term by term.
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> c(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 5;
    std::vector<mpq_class> a(n + 1);
    for (auto& x : a) x = mpq_class(c(rng), 1 + trial % 3);
    RatPolynomial expected;
    for (std::size_t k = 0; k <= n; ++k) {
      RatPolynomial term = RatPolynomial::monomial(a[k], k);
      for (std::size_t j = 1; j <= n; ++j) {
        if (j == k) continue;
        term = term * (RatPolynomial::monomial(1, j) + rat({1}));
      }
      expected = expected + term;
    }
    EXPECT_EQ(lemma6_construct(a), expected);
  }
}

TEST(Poly, LengthBoundEqualityCases) {
  EXPECT_TRUE(length_bound_holds(IntPolynomial{0, 1}, BallComplex::exact(2), Precision(64)).holds);
  EXPECT_TRUE(length_bound_holds(IntPolynomial{1, 1}, BallComplex::exact(1), Precision(64)).holds);
  EXPECT_THROW(length_bound_holds(IntPolynomial{}, BallComplex::exact(1), Precision(64)), ZeroPolynomial);
}

TEST(Poly, LengthBoundOnInexactBall) {
  const BallComplex z(BallReal(Float::from_si(3, 64), Float::pow2(-40)), BallReal(Float::from_si(1, 64), Float::pow2(-40)));
  const auto r = length_bound_holds(IntPolynomial{5, -2, 0, 1}, z, Precision(64));
  EXPECT_TRUE(r.holds);
  EXPECT_TRUE(r.margin.is_positive());
}

TEST(PolyProperty, LengthBoundSweep) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> coeff(-100, 100);
  std::uniform_int_distribution<long> deg(0, 8);
  std::uniform_int_distribution<long> num(-1000, 1000);
  for (int trial = 0; trial < 10000; ++trial) {
    std::vector<mpz_class> c(deg(rng) + 1);
    for (auto& x : c) x = coeff(rng);
    if (c.back() == 0) c.back() = 1;
    const IntPolynomial p(c);
    // Rational z with |z| <= 10 (components in [-7, 7]).
    const mpq_class re(num(rng) * 7, 1000), im(num(rng) * 7, 1000);
    const GaussianRational z(re, im);
    ASSERT_TRUE(length_bound_holds_exact(p, z)) << trial;
    if (trial % 20 == 0) {
      const auto ball = BallComplex::from_rational(re, im, Precision(64));
      ASSERT_TRUE(length_bound_holds(p, ball, Precision(64)).holds) << trial;
    }
  }
}

TEST(PolyProperty, ExpandRootsMatchesSigma) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 9);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 6;
    std::vector<mpq_class> xs(n);
    for (auto& x : xs) {
      x = mpq_class(num(rng), den(rng));
      x.canonicalize();
    }
    const RatPolynomial p = expand_roots(xs);
    ASSERT_EQ(p.degree(), static_cast<long>(n));
    for (std::size_t k = 1; k <= n; ++k) {
      const mpq_class expected = (k % 2 ? -1 : 1) * subset_sigma(xs, k);
      ASSERT_EQ(p.coeff(n - k), expected);
    }
    for (const auto& x : xs) {
      ASSERT_TRUE(eval_ball(p, BallComplex::from_rational(x, 0, Precision(128)), Precision(128)).contains_zero());
    }
  }
}

TEST(PolyProperty, Lemma6NullIffAllZero) {
  // Exhaustive over {-1, 0, 1}^(n+1) for n <= 4.
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<long> digits(n + 1, -1);
    for (;;) {
      std::vector<mpq_class> a(digits.begin(), digits.end());
      bool all_zero = true;
      for (long d : digits) all_zero = all_zero && d == 0;
      ASSERT_EQ(lemma6_construct(a).is_zero(), all_zero);
      std::size_t i = 0;
      while (i <= n && digits[i] == 1) digits[i++] = -1;
      if (i > n) break;
      ++digits[i];
    }
  }
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> num(-30, 30);
  std::uniform_int_distribution<long> den(1, 7);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + trial % 6;
    std::vector<mpq_class> a(n + 1);
    bool all_zero = true;
    for (auto& x : a) {
      x = trial % 10 == 0 ? mpq_class(0) : mpq_class(num(rng), den(rng));
      x.canonicalize();
      all_zero = all_zero && x == 0;
    }
    ASSERT_EQ(lemma6_construct(a).is_zero(), all_zero);
  }
}

TEST(PolyProperty, HeightLengthInequalities) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> coeff(-1000, 1000);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<mpz_class> c(1 + trial % 10);
    for (auto& x : c) x = coeff(rng);
    const IntPolynomial p(c);
    if (p.is_zero()) continue;
    EXPECT_LE(length(p), (p.degree() + 1) * height(p));
    EXPECT_LE(height(p), length(p));
  }
}

TEST(Poly, TextRoundTrip) {
  const IntPolynomial p{2, -1, 3};
  EXPECT_EQ(to_text(p), "3z^2 - z + 2");
  EXPECT_EQ(to_integer(parse_polynomial(to_text(p))), p);
  EXPECT_EQ(to_text(IntPolynomial{}), "0");
  EXPECT_EQ(to_integer(parse_coefficients("[\"2\", \"-1\", \"3\"]")), p);
  EXPECT_EQ(to_integer(parse_coefficients("2,-1,3")), p);
  EXPECT_EQ(parse_polynomial("1/2z - 3/4"), rat({mpq_class(-3, 4), mpq_class(1, 2)}));
  EXPECT_EQ(parse_rational("1e-3"), mpq_class(1, 1000));
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_THROW(to_integer(rat({mpq_class(1, 2)})), ParseError);
}

TEST(Poly, DivisionAndGcd) {
  const IntPolynomial a{-1, 0, 1};
  EXPECT_TRUE(divides(IntPolynomial{-1, 1}, a));
  EXPECT_FALSE(divides(IntPolynomial{1, 0, 1}, a));
  const auto g = gcd(to_rational(a), rat({-2, 2}) * rat({5, 1}));
  EXPECT_EQ(g, rat({-1, 1}));
  EXPECT_EQ(primitive_part(IntPolynomial{-4, 0, -6}), (IntPolynomial{2, 0, 3}));
}
