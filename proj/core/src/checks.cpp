#include "transkit/checks.hpp"

#include <functional>
#include <limits>
#include <stdexcept>

#include "transkit/errors.hpp"
#include "transkit/functions.hpp"
#include "transkit/poly.hpp"
#include "transkit/series_u.hpp"

namespace transkit {

long Rng::uniform(long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<long>(gen_());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = gen_();
  } while (x >= limit);
  return lo + static_cast<long>(x % span);
}

mpq_class Rng::rational(long num, long den) {
  const long p = uniform(-num, num);
  mpq_class q(p, uniform(1, den));
  q.canonicalize();
  return q;
}

namespace {

// Oracle for sigma_k: the sum over all k-subsets, by bitmask.
mpq_class subset_sigma(const std::vector<mpq_class>& xs, unsigned k) {
  mpq_class total = 0;
  const unsigned n = static_cast<unsigned>(xs.size());
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<unsigned>(__builtin_popcount(mask)) != k) continue;
    mpq_class prod = 1;
    for (unsigned i = 0; i < n; ++i) {
      if (mask & (1u << i)) prod *= xs[i];
    }
    total += prod;
  }
  return total;
}

std::string describe(const std::vector<mpq_class>& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i].get_str();
  return s + ")";
}

// Each case returns an empty string on success, a description on failure.
using Case = std::function<std::string(Rng&)>;

std::string case_lemma7(Rng& rng) {
  std::vector<mpz_class> c(static_cast<std::size_t>(rng.uniform(0, 8)) + 1);
  for (auto& x : c) x = rng.uniform(-100, 100);
  if (c.back() == 0) c.back() = 1;
  const IntPolynomial p(c);
  // |z| <= 10 via components in [-7, 7].
  const GaussianRational z(mpq_class(rng.uniform(-7000, 7000), 1000), mpq_class(rng.uniform(-7000, 7000), 1000));
  if (length_bound_holds_exact(p, z)) return {};
  return to_text(p) + " at " + z.re.get_str() + "+" + z.im.get_str() + "i";
}

std::string case_lemma6(Rng& rng) {
  const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 6));
  std::vector<mpq_class> a(n + 1);
  const bool zero_tuple = rng.uniform(0, 9) == 0;
  bool all_zero = true;
  for (auto& x : a) {
    x = zero_tuple ? mpq_class(0) : rng.rational(20, 9);
    all_zero = all_zero && x == 0;
  }
  if (lemma6_construct(a).is_zero() == all_zero) return {};
  return describe(a);
}

std::string case_symmetric(Rng& rng) {
  const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 6));
  std::vector<mpq_class> xs(n);
  for (auto& x : xs) x = rng.rational(50, 12);
  const RatPolynomial p = expand_roots(xs);
  for (std::size_t k = 1; k <= n; ++k) {
    const mpq_class expected = (k % 2 ? -1 : 1) * subset_sigma(xs, static_cast<unsigned>(k));
    if (p.coeff(n - k) != expected) return describe(xs);
  }
  return {};
}

std::string case_baker(Rng& rng) {
  const Precision prec(200);
  BallComplex z;
  switch (rng.uniform(0, 2)) {
    case 0: z = BallComplex::exact(rng.uniform(-5, 5)); break;
    case 1: z = BallComplex(BallReal::from_rational(rng.rational(500, 97), prec)); break;
    default: z = BallComplex::from_rational(rng.rational(300, 97), rng.rational(300, 97), prec); break;
  }
  const BallReal r = baker_identity_residual(z, prec);
  const Float limit = Float::from_string("1e-40", 64, MPFR_RNDD);
  if (r.contains_zero() && r.upper() <= limit) return {};
  return "residual " + r.to_string() + " at " + z.to_string();
}

std::string case_ubound(Rng& rng, QbarEnumeration& e) {
  // |w|, |z| <= 5 via components in [-3.5, 3.5].
  auto point = [&] {
    return GaussianRational(mpq_class(rng.uniform(-3500, 3500), 1000), mpq_class(rng.uniform(-3500, 3500), 1000));
  };
  const GaussianRational w = point(), z = point();
  try {
    if (u_bound_check(e, UPoint::exact(w), UPoint::exact(z), Precision(64, 1 << 14)).holds) return {};
  } catch (const Undecidable&) {
  }
  return "w=" + w.re.get_str() + "+" + w.im.get_str() + "i z=" + z.re.get_str() + "+" + z.im.get_str() + "i";
}

}  // namespace

std::vector<std::string_view> suite_names() { return {"lemma7", "lemma6", "symmetric", "baker", "ubound"}; }

SuiteReport run_suite(std::string_view name, std::uint64_t seed, long count) {
  if (count < 1) throw std::invalid_argument("count must be >= 1");
  QbarEnumeration enumeration;
  Case c;
  if (name == "lemma7") c = case_lemma7;
  else if (name == "lemma6") c = case_lemma6;
  else if (name == "symmetric") c = case_symmetric;
  else if (name == "baker") c = case_baker;
  else if (name == "ubound") c = [&](Rng& r) { return case_ubound(r, enumeration); };
  else throw std::invalid_argument("unknown suite '" + std::string(name) + "'");

  SuiteReport report;
  report.suite = std::string(name);
  report.seed = seed;
  report.count = count;
  Rng rng(seed);
  for (long i = 0; i < count; ++i) {
    const std::string failure = c(rng);
    if (failure.empty()) {
      ++report.passed;
    } else {
      ++report.failed;
      if (report.failures.size() < 5) report.failures.push_back(failure);
    }
  }
  return report;
}

}  // namespace transkit
