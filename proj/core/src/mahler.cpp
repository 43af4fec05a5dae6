#include "transkit/mahler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "transkit/errors.hpp"
#include "transkit/functions.hpp"

namespace transkit {

namespace {

using u64 = std::uint64_t;

// ---------------------------------------------------------------------------
// Screening: every candidate is evaluated at one precision with a radius that
// depends only on (xi, n, H, bits). Summing n+1 products and n sums with round
// to nearest at precision p moves the result by at most (2n+3) 2^-p sum |a_k m_k|
// <= (2n+3) 2^-p H sum |m_k|; the enclosures of xi^k add H sum rad_k.

struct PowerTable {
  long bits = 0;
  bool real = true;
  std::vector<Float> re;
  std::vector<Float> im;
  Float radius;  // bound on |computed center - P(xi)|
};

Float component_radius(const std::vector<BallReal>& comps, long n, long H, long bits) {
  Float mids(kRadiusBits), rads(kRadiusBits);
  for (const auto& c : comps) {
    mids = add_up(mids, abs_up(c.mid()));
    rads = add_up(rads, c.rad());
  }
  Float r = mul_up(mids, Float::from_si(2 * n + 3, kRadiusBits));
  mpfr_mul_2si(r.get(), r.get(), -bits, MPFR_RNDU);
  r = add_up(r, rads);
  mpfr_mul_si(r.get(), r.get(), H, MPFR_RNDU);
  return r;
}

PowerTable make_table(const Xi& xi, long n, long H, long bits, long cap) {
  const Precision prec(bits, std::max(cap, bits));
  const BallComplex x = xi.ball(bits, std::max(cap, bits));
  PowerTable t;
  t.bits = bits;
  t.real = x.is_real();
  std::vector<BallReal> re_parts, im_parts;
  BallComplex p = BallComplex::exact(1);
  for (long k = 0; k <= n; ++k) {
    if (k > 0) p = mul(p, x, prec);
    if (t.real) p = BallComplex(p.re);
    re_parts.push_back(p.re);
    im_parts.push_back(p.im);
    Float r(bits), i(bits);
    mpfr_set(r.get(), p.re.mid().get(), MPFR_RNDN);
    mpfr_set(i.get(), p.im.mid().get(), MPFR_RNDN);
    t.re.push_back(std::move(r));
    t.im.push_back(std::move(i));
  }
  // Mids were rounded to `bits` above; fold that into the component radii.
  for (long k = 0; k <= n; ++k) {
    Float dr(kRadiusBits), di(kRadiusBits);
    mpfr_sub(dr.get(), t.re[k].get(), re_parts[k].mid().get(), MPFR_RNDU);
    mpfr_sub(di.get(), t.im[k].get(), im_parts[k].mid().get(), MPFR_RNDU);
    re_parts[k] = BallReal(t.re[k], add_up(re_parts[k].rad(), abs_up(dr)));
    im_parts[k] = BallReal(t.im[k], add_up(im_parts[k].rad(), abs_up(di)));
  }
  t.radius = component_radius(re_parts, n, H, bits);
  if (!t.real) t.radius = add_up(t.radius, component_radius(im_parts, n, H, bits));
  return t;
}

struct Contender {
  u64 v;
  double lower;  // rounded down
};

struct ScreenResult {
  double best_upper = std::numeric_limits<double>::infinity();  // rounded up
  std::vector<Contender> contenders;
  std::vector<u64> suspects;
  u64 zero_polynomials = 0;
  u64 scanned = 0;
};

void prune(ScreenResult& s) {
  std::erase_if(s.contenders, [&](const Contender& c) { return c.lower > s.best_upper; });
}

std::vector<long> decode(u64 v, long n, long H) {
  const u64 base = static_cast<u64>(2 * H + 1);
  std::vector<long> d(n + 1);
  for (long k = 0; k <= n; ++k) {
    long r = static_cast<long>(v % base);
    v /= base;
    if (r > H) {
      r -= static_cast<long>(base);
      ++v;
    }
    d[k] = r;
  }
  return d;
}

// Scans V in [first, last] in the given direction.
ScreenResult screen_range(const PowerTable& t, long n, long H, u64 first, u64 last, bool reverse) {
  ScreenResult out;
  const long bits = t.bits;
  std::vector<long> d = decode(reverse ? last : first, n, H);
  std::vector<Float> sre, sim, tmp;
  for (long k = 0; k <= n + 1; ++k) {
    sre.emplace_back(bits);
    sim.emplace_back(bits);
  }
  Float prod(bits), mag_lo(kRadiusBits), mag_hi(kRadiusBits), lo(kRadiusBits), hi(kRadiusBits);

  auto refresh = [&](long top) {
    for (long k = top; k >= 0; --k) {
      mpfr_mul_si(prod.get(), t.re[k].get(), d[k], MPFR_RNDN);
      mpfr_add(sre[k].get(), sre[k + 1].get(), prod.get(), MPFR_RNDN);
      if (!t.real) {
        mpfr_mul_si(prod.get(), t.im[k].get(), d[k], MPFR_RNDN);
        mpfr_add(sim[k].get(), sim[k + 1].get(), prod.get(), MPFR_RNDN);
      }
    }
  };
  refresh(n);

  u64 v = reverse ? last : first;
  const u64 count = last - first + 1;
  for (u64 step = 0; step < count; ++step) {
    ++out.scanned;
    if (v == 0) {
      ++out.zero_polynomials;
    } else {
      if (t.real) {
        mpfr_abs(mag_lo.get(), sre[0].get(), MPFR_RNDD);
        mpfr_abs(mag_hi.get(), sre[0].get(), MPFR_RNDU);
      } else {
        mpfr_hypot(mag_lo.get(), sre[0].get(), sim[0].get(), MPFR_RNDD);
        mpfr_hypot(mag_hi.get(), sre[0].get(), sim[0].get(), MPFR_RNDU);
      }
      mpfr_sub(lo.get(), mag_lo.get(), t.radius.get(), MPFR_RNDD);
      if (lo.sign() <= 0) {
        out.suspects.push_back(v);
      } else {
        const double lower = mpfr_get_d(lo.get(), MPFR_RNDD);
        if (lower <= out.best_upper) {
          mpfr_add(hi.get(), mag_hi.get(), t.radius.get(), MPFR_RNDU);
          out.best_upper = std::min(out.best_upper, mpfr_get_d(hi.get(), MPFR_RNDU));
          out.contenders.push_back({v, lower});
          if (out.contenders.size() >= 4096 && out.contenders.size() % 4096 == 0) prune(out);
        }
      }
    }
    if (step + 1 == count) break;
    // Odometer step on the balanced digits.
    long k = 0;
    if (!reverse) {
      while (d[k] == H) d[k++] = -H;
      ++d[k];
      ++v;
    } else {
      while (d[k] == -H) d[k++] = H;
      --d[k];
      --v;
    }
    refresh(k);
  }
  prune(out);
  return out;
}

ScreenResult screen(const PowerTable& t, long n, long H, u64 last, unsigned workers, bool reverse) {
  const u64 total = last + 1;
  workers = static_cast<unsigned>(std::min<u64>(std::max(1u, workers), total));
  std::vector<ScreenResult> parts(workers);
  std::vector<std::thread> threads;
  const u64 chunk = total / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const u64 first = w * chunk;
    const u64 end = w + 1 == workers ? last : first + chunk - 1;
    if (workers == 1) {
      parts[w] = screen_range(t, n, H, first, end, reverse);
    } else {
      threads.emplace_back([&, w, first, end] { parts[w] = screen_range(t, n, H, first, end, reverse); });
    }
  }
  for (auto& th : threads) th.join();
  ScreenResult all;
  for (auto& p : parts) {
    all.best_upper = std::min(all.best_upper, p.best_upper);
    all.scanned += p.scanned;
    all.zero_polynomials += p.zero_polynomials;
    all.suspects.insert(all.suspects.end(), p.suspects.begin(), p.suspects.end());
    all.contenders.insert(all.contenders.end(), p.contenders.begin(), p.contenders.end());
  }
  prune(all);
  std::sort(all.suspects.begin(), all.suspects.end());
  std::sort(all.contenders.begin(), all.contenders.end(),
            [](const Contender& a, const Contender& b) { return a.v < b.v; });
  return all;
}

// ---------------------------------------------------------------------------
// Exact and certified evaluation of single candidates.

BallReal magnitude(const IntPolynomial& p, const Xi& xi, long bits, long cap) {
  const Precision prec(bits, std::max(cap, bits));
  const BallComplex x = xi.ball(bits, std::max(cap, bits));
  const BallComplex v = eval_ball(p, x, prec);
  if (v.is_real()) return abs(v.re, prec);
  return abs_ball(v, prec);
}

mpq_class exact_magnitude(const IntPolynomial& p, const mpq_class& x) {
  const GaussianRational v = p.evaluate(GaussianRational(x));
  return abs(v.re);
}

enum class Tie { yes, no, unknown };

// Zero test for D = |P(xi)|^2 - |Q(xi)|^2 at a non-real algebraic xi. With a
// the leading coefficient and d the degree of the minimal polynomial,
// a^(2n) D is an algebraic integer whose conjugates are bounded by
// B = a^(2n) (L(P)^2 + L(Q)^2) M^(2n), M a Cauchy bound on the roots, and its
// degree is at most d(d-1). A nonzero D therefore has |D| >= a^(-2n) B^(1-d(d-1)).
Tie complex_tie(const IntPolynomial& p, const IntPolynomial& q, const AlgebraicNumber& a, long n,
                const BallComplex& pv, const BallComplex& qv, const Precision& prec) {
  const mpz_class lead = a.minpoly.leading();
  const long d = a.degree();
  const mpz_class m = 1 + (height(a.minpoly) + lead - 1) / lead;
  mpz_class an, mn;
  mpz_pow_ui(an.get_mpz_t(), lead.get_mpz_t(), 2 * n);
  mpz_pow_ui(mn.get_mpz_t(), m.get_mpz_t(), 2 * n);
  const mpz_class lp = length(p), lq = length(q);
  const mpz_class b = an * (lp * lp + lq * lq) * mn;
  mpz_class bpow;
  mpz_pow_ui(bpow.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(d * (d - 1) - 1));
  const Float threshold = Float::from_q(mpq_class(1, an * bpow), kRadiusBits, MPFR_RNDD);
  auto norm2 = [&](const BallComplex& z) { return add(sqr(z.re, prec), sqr(z.im, prec), prec); };
  const BallReal diff = sub(norm2(pv), norm2(qv), prec);
  if (diff.excludes_zero()) return Tie::no;
  if (abs(diff, prec).upper() < threshold) return Tie::yes;
  return Tie::unknown;
}

struct Evaluated {
  u64 v;
  IntPolynomial p;
  BallReal mag;
};

BallReal hull_all(const std::vector<Evaluated>& xs, const Precision& prec) {
  BallReal h = xs.front().mag;
  for (std::size_t i = 1; i < xs.size(); ++i) h = hull(h, xs[i].mag, prec);
  return h;
}

}  // namespace

// ---------------------------------------------------------------------------

bool Xi::is_real() const {
  if (const auto* a = std::get_if<AlgebraicNumber>(&value_)) return a->is_real();
  if (const auto* z = std::get_if<BallComplex>(&value_)) return z->is_real();
  return true;
}

BallComplex Xi::ball(long bits, long cap) const {
  if (const auto* a = std::get_if<AlgebraicNumber>(&value_)) return approx_bits(*a, bits, cap);
  if (const auto* z = std::get_if<BallComplex>(&value_)) return *z;
  const Precision prec(std::max(bits, kMinBits) + 4, std::max(cap, bits + 4));
  switch (std::get<NamedConstant>(value_)) {
    case NamedConstant::pi: return BallComplex(const_pi(prec));
    case NamedConstant::e: return BallComplex(const_e(prec));
    case NamedConstant::liouville:
      return BallComplex(liouville_constant(Float::pow2(-bits), prec.cap()));
  }
  throw std::logic_error("unknown constant");
}

std::string Xi::describe() const {
  if (const auto* a = std::get_if<AlgebraicNumber>(&value_)) {
    return "root " + std::to_string(a->root_index) + " of " + to_text(a->minpoly);
  }
  if (const auto* z = std::get_if<BallComplex>(&value_)) return z->to_string();
  switch (std::get<NamedConstant>(value_)) {
    case NamedConstant::pi: return "pi";
    case NamedConstant::e: return "e";
    case NamedConstant::liouville: return "liouville";
  }
  return "?";
}

mpz_class omega_search_size(long n, long H) {
  if (n < 1 || H < 1) throw std::invalid_argument("omega search needs n >= 1 and H >= 1");
  mpz_class total;
  mpz_ui_pow_ui(total.get_mpz_t(), static_cast<unsigned long>(2 * H + 1), static_cast<unsigned long>(n + 1));
  return (total - 1) / 2 + 1;
}

IntPolynomial polynomial_from_index(std::uint64_t v, long n, long H) {
  const auto d = decode(v, n, H);
  return IntPolynomial(std::vector<mpz_class>(d.begin(), d.end()));
}

std::int64_t index_of_polynomial(const IntPolynomial& p, long n, long H) {
  if (p.degree() > n || (!p.is_zero() && height(p) > H)) {
    throw std::invalid_argument(to_text(p) + " is outside the search space");
  }
  std::int64_t v = 0;
  for (long k = n; k >= 0; --k) v = v * (2 * H + 1) + p.coeff(k).get_si();
  return v;
}

BallReal omega_exponent(const BallReal& omega, long n, long H, Precision prec) {
  if (H < 2) throw std::invalid_argument("the exponent needs H >= 2");
  const BallReal num = neg(log(omega, prec));
  const BallReal den = mul(log(BallReal::exact(H), prec), n, prec);
  return div(num, den, prec);
}

ZeroDecision zero_detect(const IntPolynomial& p, const Xi& xi, long start_bits, long max_bits) {
  if (p.is_zero()) return {true, BallReal(), 0};
  if (const auto* a = xi.algebraic()) {
    if (divides(a->minpoly, p)) return {true, BallReal(), 0};
    if (a->is_rational()) {
      const mpq_class m = exact_magnitude(p, a->rational_value());
      return {false, BallReal::from_rational(m, Precision(std::max(start_bits, kMinBits))), start_bits};
    }
  }
  for (long bits = std::max(start_bits, kMinBits);; bits *= 2) {
    const BallReal m = magnitude(p, xi, bits, max_bits);
    if (m.excludes_zero()) return {false, m, bits};
    if (xi.is_fixed_ball() || bits * 2 > max_bits) {
      throw UndecidableZero("cannot separate " + to_text(p) + " at " + xi.describe() + " from zero");
    }
  }
}

OmegaResult omega_search(const OmegaQuery& q) {
  const long n = q.n, H = q.H;
  const mpz_class size = omega_search_size(n, H);
  if (size > mpz_class(std::to_string(q.budget)) || !size.fits_ulong_p()) {
    throw BudgetExceeded("search space of " + size.get_str() + " candidates exceeds budget " +
                         std::to_string(q.budget));
  }
  const u64 last = size.get_ui() - 1;
  const long cap = std::max(q.max_bits, q.start_bits);
  const unsigned workers = q.workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : q.workers;
  const Xi& xi = q.xi;
  const AlgebraicNumber* alg = xi.algebraic();

  const PowerTable table = make_table(xi, n, H, q.start_bits, cap);
  ScreenResult s = screen(table, n, H, last, workers, q.reverse_scan);

  OmegaResult result;
  result.candidates_scanned = s.scanned;
  result.zeros_excluded = s.zero_polynomials;

  // Suspects: exact zeros are excluded; certified nonzero ones rejoin the contenders.
  std::vector<u64> pool;
  for (const auto& c : s.contenders) pool.push_back(c.v);
  for (u64 v : s.suspects) {
    const IntPolynomial p = polynomial_from_index(v, n, H);
    try {
      const ZeroDecision z = zero_detect(p, xi, q.start_bits, cap);
      if (z.zero) {
        ++result.zeros_excluded;
      } else if (mpfr_get_d(z.magnitude.lower().get(), MPFR_RNDD) <= s.best_upper) {
        pool.push_back(v);
      }
    } catch (const UndecidableZero&) {
      result.undecidable.push_back(p);
    }
  }
  std::sort(pool.begin(), pool.end());

  if (alg != nullptr && alg->is_rational()) {
    const mpq_class x = alg->rational_value();
    mpq_class best = -1;
    u64 best_v = 0;
    for (u64 v : pool) {
      const mpq_class m = exact_magnitude(polynomial_from_index(v, n, H), x);
      if (m != 0 && (best < 0 || m < best)) {
        best = m;
        best_v = v;
      }
    }
    result.argmin = polynomial_from_index(best_v, n, H);
    const long bits = std::max(q.start_bits, kMinBits);
    result.omega_min = BallReal::from_rational(best, Precision(bits, std::max(cap, bits)));
    result.bits = bits;
  } else {
    std::vector<Evaluated> live;
    for (u64 v : pool) live.push_back({v, polynomial_from_index(v, n, H), BallReal()});
    for (long bits = std::max(q.start_bits, kMinBits);; bits *= 2) {
      const Precision prec(bits, std::max(cap, bits));
      const BallComplex x = xi.ball(bits, std::max(cap, bits));
      std::vector<BallComplex> values;
      for (auto& e : live) {
        values.push_back(eval_ball(e.p, x, prec));
        e.mag = values.back().is_real() ? abs(values.back().re, prec) : abs_ball(values.back(), prec);
      }
      Float best = live.front().mag.upper();
      for (const auto& e : live) {
        if (e.mag.excludes_zero()) best = min_of(best, e.mag.upper());
      }
      std::vector<Evaluated> kept;
      std::vector<BallComplex> kept_values;
      for (std::size_t i = 0; i < live.size(); ++i) {
        if (live[i].mag.lower() <= best) {
          kept.push_back(live[i]);
          kept_values.push_back(values[i]);
        }
      }
      live = std::move(kept);

      // Every survivor must be certified equal in value to the first one.
      bool one_class = live.front().mag.excludes_zero();
      for (std::size_t i = 1; one_class && i < live.size(); ++i) {
        Tie t = Tie::unknown;
        if (alg != nullptr && (divides(alg->minpoly, live[0].p - live[i].p) ||
                               divides(alg->minpoly, live[0].p + live[i].p))) {
          t = Tie::yes;
        } else if (alg != nullptr && !alg->is_real()) {
          t = complex_tie(live[0].p, live[i].p, *alg, n, kept_values[0], kept_values[i], prec);
        }
        one_class = t == Tie::yes;
      }
      if (one_class) {
        result.argmin = live.front().p;
        result.omega_min = live.front().mag;
        result.bits = bits;
        break;
      }
      if (xi.is_fixed_ball() || bits * 2 > cap) {
        result.tie_unresolved = true;
        result.argmin = live.front().p;
        result.omega_min = hull_all(live, prec);
        result.bits = bits;
        break;
      }
    }
  }
  if (H >= 2) {
    const long bits = std::max(result.bits, 64L);
    result.exponent = omega_exponent(result.omega_min, n, H, Precision(bits, std::max(cap, bits)));
  }
  return result;
}

std::vector<TrajectoryPoint> omega_trajectory(const OmegaQuery& base, const std::vector<long>& H_list) {
  std::vector<TrajectoryPoint> out;
  long prev = 1;
  for (long h : H_list) {
    if (h < 2 || h <= prev) throw std::invalid_argument("H list must be ascending and >= 2");
    prev = h;
    OmegaQuery q = base;
    q.H = h;
    out.push_back({h, omega_search(q)});
  }
  return out;
}

}  // namespace transkit
