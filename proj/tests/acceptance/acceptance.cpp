// Acceptance run: one PASS/FAIL line per criterion, with its runtime limit.
//
// Usage: transkit_acceptance <golden-dir>

#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../support/near.hpp"
#include "../support/quadratic_oracle.hpp"
#include "transkit/checks.hpp"
#include "transkit/errors.hpp"
#include "transkit/functions.hpp"
#include "transkit/mahler.hpp"
#include "transkit/poly.hpp"
#include "transkit/qbar.hpp"
#include "transkit/roots.hpp"
#include "transkit/series_u.hpp"

using namespace transkit;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::string golden_dir;

// ---------------------------------------------------------------------------
// shared helpers

mpq_class dyadic(Rng& rng, long range, long frac_bits) {
  return mpq_class(rng.uniform(-range << frac_bits, range << frac_bits), mpz_class(1) << frac_bits);
}

IntPolynomial from_longs(const std::vector<long>& c) {
  return IntPolynomial(std::vector<mpz_class>(c.begin(), c.end()));
}

mpq_class pow_q(const mpq_class& x, long k) {
  mpq_class r = 1;
  for (long i = 0; i < k; ++i) r *= x;
  return r;
}

// ---------------------------------------------------------------------------
// 1. length bound

Outcome length_bound() {
  Outcome out;
  Rng rng(20240601);
  long violations = 0;
  for (int i = 0; i < 10000; ++i) {
    const long d = rng.uniform(0, 8);
    std::vector<long> c(d + 1);
    do {
      for (auto& x : c) x = rng.uniform(-100, 100);
    } while (std::all_of(c.begin(), c.end(), [](long x) { return x == 0; }));
    const IntPolynomial p = from_longs(c);
    // |re|, |im| <= 7 keeps |z| <= 7 sqrt 2 < 10
    const long d1 = rng.uniform(1, 1000), d2 = rng.uniform(1, 1000);
    const GaussianRational zz{mpq_class(rng.uniform(-7 * d1, 7 * d1), d1), mpq_class(rng.uniform(-7 * d2, 7 * d2), d2)};
    const bool lib = length_bound_holds_exact(p, zz);
    // direct check: |P(z)|^2 <= L^2 max(1,|z|^2)^deg
    const GaussianRational v = p.evaluate(zz);
    const mpq_class L = mpq_class(length(p));
    const bool direct = v.norm() <= L * L * pow_q(std::max(mpq_class(1), zz.norm()), p.degree());
    if (!lib || !direct) {
      ++violations;
      out.fail("violation at " + to_text(p));
    }
  }
  out.detail = out.ok ? "10000 cases, 0 violations" : out.detail + " (" + std::to_string(violations) + " total)";
  return out;
}

// ---------------------------------------------------------------------------
// 2. product-sum construction is never null for a nonzero tuple

Outcome lemma6_nonnull() {
  Outcome out;
  long cases = 0;
  for (long n = 1; n <= 4; ++n) {
    std::vector<long> a(n + 1, -2);
    for (;;) {
      std::vector<mpq_class> q(a.begin(), a.end());
      const bool all_zero = std::all_of(a.begin(), a.end(), [](long x) { return x == 0; });
      if (lemma6_construct(q).is_zero() != all_zero) out.fail("grid tuple n=" + std::to_string(n));
      ++cases;
      long i = 0;
      while (i <= n && a[i] == 2) a[i++] = -2;
      if (i > n) break;
      ++a[i];
    }
  }
  Rng rng(6);
  for (int i = 0; i < 1000; ++i) {
    const long n = rng.uniform(1, 6);
    std::vector<mpq_class> q(n + 1);
    const bool force_zero = i % 50 == 0;
    for (auto& x : q) x = force_zero || rng.uniform(0, 3) == 0 ? mpq_class(0) : rng.rational(50, 20);
    const bool all_zero = std::all_of(q.begin(), q.end(), [](const mpq_class& x) { return x == 0; });
    if (lemma6_construct(q).is_zero() != all_zero) out.fail("random tuple n=" + std::to_string(n));
    ++cases;
  }
  if (out.ok) out.detail = std::to_string(cases) + " tuples";
  return out;
}

// ---------------------------------------------------------------------------
// 3. coefficients of prod (z - x_i) are the signed elementary symmetric sums

Outcome symmetric_identity() {
  Outcome out;
  Rng rng(5);
  for (int i = 0; i < 500; ++i) {
    const long n = rng.uniform(1, 6);
    std::vector<mpq_class> xs(n);
    for (auto& x : xs) x = rng.rational(30, 12);
    const RatPolynomial p = expand_roots(xs);
    for (long k = 0; k <= n; ++k) {
      // sigma_k by summing over all k-subsets
      mpq_class s = 0;
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != k) continue;
        mpq_class prod = 1;
        for (long j = 0; j < n; ++j)
          if (mask >> j & 1) prod *= xs[j];
        s += prod;
      }
      const mpq_class expected = k % 2 == 0 ? s : mpq_class(-s);
      if (p.coeff(n - k) != expected) out.fail("mismatch n=" + std::to_string(n) + " k=" + std::to_string(k));
      if (k >= 1 && sigma(xs, k) != s) out.fail("sigma mismatch");
    }
  }
  if (out.ok) out.detail = "500 tuples";
  return out;
}

// ---------------------------------------------------------------------------
// 4. truncation consistency of U

bool exactly_zero(const BallComplex& b) {
  return b.is_exact() && b.re.mid().is_zero() && b.im.mid().is_zero();
}

GaussianRational random_point(Rng& rng, long max_abs) {
  // each component in [-max_abs/sqrt 2, max_abs/sqrt 2]
  const long lim = max_abs * 707;
  return {mpq_class(rng.uniform(-lim, lim), 1000), mpq_class(rng.uniform(-lim, lim), 1000)};
}

Outcome u_truncation() {
  Outcome out;
  QbarEnumeration e;
  Rng rng(4);
  const Float target = Float::from_q(oracle::ten_to(-30), kRadiusBits, MPFR_RNDD);
  long cases = 0;
  for (std::size_t t = 0; t <= 8; ++t)
    for (int i = 0; i < 20; ++i) {
      const UPoint w = UPoint::exact(random_point(rng, 3));
      const BallComplex fin = u_finite_sum(e, w, t, Precision(256));
      const auto full = u_eval(e, w, UPoint::alpha(t + 1), target);
      if (!overlaps(full.value, fin) || full.value.max_rad() > target)
        out.fail("t=" + std::to_string(t) + " exact point");
      const auto num = u_eval(e, w, UPoint::ball(e.approx(t + 1, 256)), target);
      if (!overlaps(num.value, fin)) out.fail("t=" + std::to_string(t) + " ball point");
      cases += 2;
    }
  for (int i = 0; i < 20; ++i) {
    const UPoint w = UPoint::exact(random_point(rng, 3));
    if (!exactly_zero(u_eval(e, w, UPoint::alpha(1), target).value)) out.fail("U(w, alpha_1) != 0");
    if (!exactly_zero(u_eval(e, UPoint::exact(0), UPoint::exact(random_point(rng, 5)), target).value))
      out.fail("U(0, z) != 0");
    cases += 2;
  }
  if (out.ok) out.detail = std::to_string(cases) + " evaluations";
  return out;
}

// ---------------------------------------------------------------------------
// 5. growth bound of U

Outcome u_growth() {
  Outcome out;
  QbarEnumeration e;
  Rng rng(55);
  for (int i = 0; i < 500; ++i) {
    const GaussianRational w = random_point(rng, 5), z = random_point(rng, 5);
    try {
      const auto c = u_bound_check(e, UPoint::exact(w), UPoint::exact(z), Precision(64));
      if (!c.holds) out.fail("bound fails");
    } catch (const Undecidable&) {
      out.fail("undecidable");
    }
  }
  if (out.ok) out.detail = "500 points certified";
  return out;
}

// ---------------------------------------------------------------------------
// 6. Omega against the brute-force reference

bool encloses(const oracle::QuadField& f, const BallReal& b, const oracle::Quad& v) {
  return f.cmp_abs(v, b.lower().to_rational()) >= 0 && f.cmp_abs(v, b.upper().to_rational()) <= 0;
}

Outcome omega_oracle() {
  Outcome out;
  struct Case {
    const char* name;
    oracle::QuadField field;
    IntPolynomial minpoly;
    std::size_t root_index;
  };
  const std::vector<Case> cases = {
      {"1/2", {mpq_class(1, 2), 0, 2}, {-1, 2}, 0},
      {"sqrt2", {0, 1, 2}, {-2, 0, 1}, 1},
      {"golden", {mpq_class(1, 2), mpq_class(1, 2), 5}, {-1, -1, 1}, 1},
  };
  long runs = 0;
  for (const auto& c : cases) {
    const Xi xi(make_algebraic(c.minpoly, c.root_index));
    for (long n = 1; n <= 2; ++n)
      for (long H = 1; H <= 5; ++H) {
        const auto ref = oracle::naive_omega(c.field, n, H);
        for (unsigned w : {1u, 2u, 4u}) {
          OmegaQuery q{xi, n, H};
          q.workers = w;
          const OmegaResult r = omega_search(q);
          ++runs;
          const std::string tag = std::string(c.name) + " n=" + std::to_string(n) + " H=" + std::to_string(H) +
                                  " workers=" + std::to_string(w);
          if (r.tie_unresolved || !r.undecidable.empty()) out.fail(tag + ": inconclusive");
          if (r.argmin != from_longs(ref.argmin)) out.fail(tag + ": argmin " + to_text(r.argmin));
          if (!encloses(c.field, r.omega_min, ref.value)) out.fail(tag + ": value");
          if (r.omega_min.rad() > Float::pow2(-60)) out.fail(tag + ": radius");
          if (c.field.q == 0 && !r.omega_min.is_exact()) out.fail(tag + ": rational value not exact");
        }
      }
  }
  const OmegaResult half = omega_search({Xi::rational(mpq_class(1, 2)), 1, 10});
  if (!half.omega_min.is_exact() || half.omega_min.mid().to_rational() != mpq_class(1, 2))
    out.fail("Omega_1(1/2, 10) != 1/2");
  if (!half.exponent || !oracle::near(*half.exponent, "0.3010300", oracle::ten_to(-6)) ||
      half.exponent->rad().to_rational() > oracle::ten_to(-7))
    out.fail("omega_1(1/2, 10) not 0.3010300 +- 1e-6");
  for (long n = 1; n <= 3; ++n)
    for (long H : {2L, 5L}) {
      const OmegaResult z = omega_search({Xi::rational(0), n, H});
      if (z.omega_min.mid().to_rational() != 1 || !z.omega_min.is_exact()) out.fail("Omega_n(0, H) != 1");
      if (!z.exponent || !z.exponent->contains(0) || z.exponent->rad() > Float::pow2(-60))
        out.fail("omega_n(0, H) != 0");
    }
  if (out.ok)
    out.detail = std::to_string(runs) + " searches match; omega_1(1/2,10) = " + half.exponent->to_string(8);
  return out;
}

// ---------------------------------------------------------------------------
// 7. Liouville witness and digits

mpz_class floor_q(const mpq_class& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Outcome liouville() {
  Outcome out;
  for (long n = 1; n <= 6; ++n) {
    const auto w = liouville_witness(n);
    if (!w.holds || !(w.gap_lower > 0) || !(w.gap_upper < w.bound)) out.fail("witness n=" + std::to_string(n));
    // bound = q^-n independently
    const mpq_class qn = pow_q(mpq_class(w.approx.q), n);
    if (w.bound != 1 / qn) out.fail("bound n=" + std::to_string(n));
  }
  const BallReal l = liouville_constant(Float::pow2(-100));
  const mpq_class scale = oracle::ten_to(7);
  const mpz_class lo = floor_q(l.lower().to_rational() * scale), hi = floor_q(l.upper().to_rational() * scale);
  if (lo != 1100010 || hi != 1100010) out.fail("digits " + lo.get_str());
  if (out.ok) out.detail = "n = 1..6 certified; l = 0." + lo.get_str() + "...";
  return out;
}

// ---------------------------------------------------------------------------
// 8. exp(i pi) = -1 route

Outcome baker() {
  Outcome out;
  Rng rng(8);
  Float worst(64);
  for (int i = 0; i < 10; ++i) {
    mpq_class re, im;
    switch (i % 3) {
      case 0: re = rng.uniform(-5, 5); break;           // integer, real
      case 1: re = rng.rational(40, 13); break;         // rational, real
      default: re = rng.rational(40, 13); im = rng.rational(40, 13);
    }
    const BallComplex z = BallComplex::from_rational(re, im, Precision(400));
    const BallReal r = baker_identity_residual(z, Precision(200));
    if (r.upper().to_rational() > oracle::ten_to(-40)) out.fail("residual at " + re.get_str() + "+" + im.get_str() + "i");
    if (r.upper() > worst) worst = r.upper();
  }
  if (out.ok) out.detail = "max residual bound " + worst.to_decimal(3, MPFR_RNDU);
  return out;
}

// ---------------------------------------------------------------------------
// 9. enumeration determinism

bool has_rational_root(const std::vector<long>& c) {
  // candidates +-p/q with p | a_0, q | a_d
  const long a0 = std::abs(c.front()), ad = std::abs(c.back());
  if (a0 == 0) return true;
  for (long p = 1; p <= a0; ++p) {
    if (a0 % p) continue;
    for (long q = 1; q <= ad; ++q) {
      if (ad % q) continue;
      for (long s : {1L, -1L}) {
        const mpq_class x(s * p, q);
        mpq_class v = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
        if (v == 0) return true;
      }
    }
  }
  return false;
}

Outcome enumeration() {
  Outcome out;
  QbarEnumeration e;
  std::ifstream in(golden_dir + "/qbar_first_1000.jsonl");
  if (!in) {
    out.fail("golden list missing");
    return out;
  }
  std::string line;
  std::size_t count = 0;
  const mpq_class slack = Float::pow2(-100).to_rational();
  while (std::getline(in, line)) {
    const auto j = nlohmann::json::parse(line);
    const auto k = j["k"].get<std::size_t>();
    const auto& a = e.at(k);
    std::vector<long> c = j["coeffs"].get<std::vector<long>>();
    const auto inside = [&](const BallReal& b, const std::string& s) {
      const mpq_class x = parse_rational(s);
      return b.lower().to_rational() <= x + slack && x <= b.upper().to_rational() + slack;
    };
    if (a.minpoly != from_longs(c) || a.root_index != j["root_index"].get<std::size_t>() ||
        !inside(a.isol.re, j["re"]) || !inside(a.isol.im, j["im"]))
      out.fail("golden mismatch at k=" + std::to_string(k));
    ++count;
  }
  if (count != 1000) out.fail("golden list has " + std::to_string(count) + " entries");

  std::set<std::pair<std::string, std::size_t>> seen;
  for (std::size_t k = 1; k <= 1000; ++k)
    if (!seen.emplace(to_text(e.at(k).minpoly), e.at(k).root_index).second)
      out.fail("duplicate at k=" + std::to_string(k));
  for (std::size_t k = 1; k < 1000; ++k) {
    const auto &a = e.at(k), &b = e.at(k + 1);
    if (overlaps(a.isol, b.isol) && overlaps(e.approx(k, 512), e.approx(k + 1, 512)))
      out.fail("inseparable neighbours at k=" + std::to_string(k));
  }

  // deg + H <= 4 means degree <= 3, so irreducible is the same as no rational root.
  std::set<std::pair<std::string, std::size_t>> expected;
  for (long d = 1; d <= 3; ++d)
    for (long h = 1; d + h <= 4; ++h) {
      std::vector<long> c(d + 1, -h);
      for (;;) {
        long g = 0, hh = 0;
        for (long x : c) {
          g = std::gcd(g, x);
          hh = std::max(hh, std::abs(x));
        }
        if (c[d] > 0 && g == 1 && hh == h && (d == 1 || !has_rational_root(c)))
          for (long r = 0; r < d; ++r) expected.emplace(to_text(from_longs(c)), r);
        long i = 0;
        while (i <= d && c[i] == h) c[i++] = -h;
        if (i > d) break;
        ++c[i];
      }
    }
  std::multiset<std::pair<std::string, std::size_t>> listed;
  std::size_t k = 1;
  for (; enum_key(e.at(k).minpoly).s <= 4; ++k) listed.emplace(to_text(e.at(k).minpoly), e.at(k).root_index);
  if (listed.size() != expected.size() || std::set(listed.begin(), listed.end()) != expected)
    out.fail("deg + H <= 4 block: " + std::to_string(listed.size()) + " listed, " +
             std::to_string(expected.size()) + " expected");
  if (out.ok) out.detail = "1000 golden entries, " + std::to_string(expected.size()) + " numbers with deg+H <= 4";
  return out;
}

// ---------------------------------------------------------------------------
// 10. refinement of every public evaluator

using Probe = std::function<BallComplex(long bits)>;

struct Evaluator {
  std::string name;
  std::function<Probe(Rng&)> make;
};

BallComplex real(const BallReal& x) { return BallComplex(x); }

std::vector<Evaluator> evaluators(QbarEnumeration& e) {
  auto point = [](Rng& rng, long range) {
    return BallComplex::from_rational(dyadic(rng, range, 20), dyadic(rng, range, 20), Precision(64));
  };
  auto positive = [](Rng& rng) { return BallReal::from_rational(mpq_class(rng.uniform(1, 1 << 24), 1 << 12), Precision(64)); };
  std::vector<Evaluator> v;
  for (auto [name, op] : {std::pair{"add", ArithOp::add}, std::pair{"sub", ArithOp::sub},
                          std::pair{"mul", ArithOp::mul}, std::pair{"div", ArithOp::div}})
    v.push_back({name, [op, point](Rng& rng) -> Probe {
                   const BallComplex a = point(rng, 100), b = point(rng, 100);
                   return [=](long bits) { return arith(op, a, b, Precision(bits)); };
                 }});
  v.push_back({"exp", [point](Rng& rng) -> Probe {
                 const BallComplex a = point(rng, 20);
                 return [=](long bits) { return exp_ball(a, Precision(bits)); };
               }});
  v.push_back({"abs", [point](Rng& rng) -> Probe {
                 const BallComplex a = point(rng, 100);
                 return [=](long bits) { return real(abs_ball(a, Precision(bits))); };
               }});
  v.push_back({"pow_int", [point](Rng& rng) -> Probe {
                 const BallComplex a = point(rng, 3);
                 const long k = rng.uniform(0, 40);
                 return [=](long bits) { return pow_int(a, k, Precision(bits)); };
               }});
  v.push_back({"sqrt", [positive](Rng& rng) -> Probe {
                 const BallReal a = positive(rng);
                 return [=](long bits) { return real(sqrt(a, Precision(bits))); };
               }});
  v.push_back({"log", [positive](Rng& rng) -> Probe {
                 const BallReal a = positive(rng);
                 return [=](long bits) { return real(log(a, Precision(bits))); };
               }});
  v.push_back({"sin_cos", [point](Rng& rng) -> Probe {
                 const BallReal a = point(rng, 50).re;
                 return [=](long bits) { return BallComplex(sin(a, Precision(bits)), cos(a, Precision(bits))); };
               }});
  v.push_back({"const_pi_e", [](Rng& rng) -> Probe {
                 const long shift = rng.uniform(0, 8);
                 return [=](long bits) {
                   return BallComplex(const_pi(Precision(bits + shift)), const_e(Precision(bits + shift)));
                 };
               }});
  v.push_back({"eval_ball", [point](Rng& rng) -> Probe {
                 std::vector<long> c(rng.uniform(1, 10));
                 for (auto& x : c) x = rng.uniform(-50, 50);
                 c.back() = rng.uniform(1, 50);
                 const IntPolynomial p = from_longs(c);
                 const BallComplex z = point(rng, 4);
                 return [=](long bits) { return eval_ball(p, z, Precision(bits)); };
               }});
  v.push_back({"sigma", [point](Rng& rng) -> Probe {
                 std::vector<BallComplex> xs(rng.uniform(1, 8));
                 for (auto& x : xs) x = point(rng, 5);
                 const long k = rng.uniform(1, static_cast<long>(xs.size()));
                 return [=](long bits) { return sigma(xs, k, Precision(bits)); };
               }});
  v.push_back({"roots_of", [](Rng& rng) -> Probe {
                 std::vector<long> c(rng.uniform(2, 7));
                 IntPolynomial p;
                 do {
                   for (auto& x : c) x = rng.uniform(-9, 9);
                   c.back() = rng.uniform(1, 9);
                   p = from_longs(c);
                 } while (gcd(to_rational(p), to_rational(p.derivative())).degree() > 0);
                 const std::size_t idx = static_cast<std::size_t>(rng.uniform(0, p.degree() - 1));
                 return [=](long bits) { return roots_of(p, Precision(2 * bits))[idx]; };
               }});
  v.push_back({"qbar_approx", [&e](Rng& rng) -> Probe {
                 const auto k = static_cast<std::size_t>(rng.uniform(1, 3000));
                 return [&e, k](long bits) { return e.approx(k, bits); };
               }});
  for (auto [name, fn] : {std::pair{"f", eval_f}, std::pair{"g", eval_g}, std::pair{"h", eval_h},
                          std::pair{"ee", eval_double_exp}})
    v.push_back({name, [fn, point](Rng& rng) -> Probe {
                   const BallComplex z = point(rng, 3);
                   return [=](long bits) { return fn(z, Precision(bits)); };
                 }});
  v.push_back({"baker_residual", [point](Rng& rng) -> Probe {
                 const BallComplex z = point(rng, 5);
                 return [=](long bits) { return real(baker_identity_residual(z, Precision(bits))); };
               }});
  v.push_back({"liouville_constant", [](Rng& rng) -> Probe {
                 const long shift = rng.uniform(0, 8);
                 return [=](long bits) { return real(liouville_constant(Float::pow2(-bits - shift))); };
               }});
  v.push_back({"xi_ball", [](Rng& rng) -> Probe {
                 const Xi xi(static_cast<NamedConstant>(rng.uniform(0, 2)));
                 return [=](long bits) { return xi.ball(bits); };
               }});
  v.push_back({"omega_exponent", [](Rng& rng) -> Probe {
                 const BallReal om = BallReal::from_rational(mpq_class(rng.uniform(1, 1 << 20), 1 << 21), Precision(64));
                 const long n = rng.uniform(1, 6), H = rng.uniform(2, 50);
                 return [=](long bits) { return real(omega_exponent(om, n, H, Precision(bits))); };
               }});
  v.push_back({"u_term", [&e, point](Rng& rng) -> Probe {
                 const BallComplex w = point(rng, 2), z = point(rng, 3);
                 const long n = rng.uniform(1, 30);
                 return [&e, w, z, n](long bits) {
                   return u_term(e, n, UPoint::ball(w), UPoint::ball(z), Precision(bits));
                 };
               }});
  v.push_back({"u_eval", [&e](Rng& rng) -> Probe {
                 const GaussianRational w = random_point(rng, 3), z = random_point(rng, 4);
                 return [&e, w, z](long bits) {
                   return u_eval(e, UPoint::exact(w), UPoint::exact(z), Float::pow2(-bits / 2)).value;
                 };
               }});
  return v;
}

Outcome refinement() {
  Outcome out;
  QbarEnumeration e;
  Rng rng(10);
  const auto list = evaluators(e);
  for (const auto& ev : list) {
    for (int probe = 0; probe < 100; ++probe) {
      const Probe f = ev.make(rng);
      BallComplex prev = f(64);
      for (long bits = 128; bits <= 1024; bits *= 2) {
        const BallComplex next = f(bits);
        if (next.re.rad() > prev.re.rad() || next.im.rad() > prev.im.rad())
          out.fail(ev.name + ": radius grew at " + std::to_string(bits) + " bits");
        if (!overlaps(prev, next)) out.fail(ev.name + ": moved off the enclosure at " + std::to_string(bits) + " bits");
        prev = next;
      }
    }
  }
  if (out.ok) out.detail = std::to_string(list.size()) + " evaluators x 100 probes";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: transkit_acceptance <golden-dir>\n";
    return 2;
  }
  golden_dir = argv[1];

  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "length bound", 30, length_bound},
      {2, "product-sum non-nullity", 10, lemma6_nonnull},
      {3, "symmetric identity", 5, symmetric_identity},
      {4, "U truncation consistency", 60, u_truncation},
      {5, "U growth bound", 60, u_growth},
      {6, "Omega oracle equivalence", 120, omega_oracle},
      {7, "Liouville witness", 5, liouville},
      {8, "exp(i pi) identity", 5, baker},
      {9, "enumeration determinism", 60, enumeration},
      {10, "kernel refinement", 60, refinement},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& ex) {
      o.fail(std::string("exception: ") + ex.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && s > c.limit_s) o.fail("too slow");
    failed += !o.ok;
    std::printf("%s [%2d] %-28s %7.2f s (limit %3.0f s)  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, s,
                c.limit_s, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
