#include "transkit/roots.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "transkit/errors.hpp"

namespace transkit {
namespace {

// Plain complex floating point for the iteration; certification happens in balls.
struct CFloat {
  Float re;
  Float im;
  explicit CFloat(long bits) : re(bits), im(bits) {}
};

void set_prec(CFloat& z, long bits) {
  mpfr_prec_round(z.re.get(), bits, MPFR_RNDN);
  mpfr_prec_round(z.im.get(), bits, MPFR_RNDN);
}

CFloat cmul(const CFloat& a, const CFloat& b, long bits) {
  CFloat r(bits);
  Float t(bits);
  mpfr_mul(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_sub(r.re.get(), r.re.get(), t.get(), MPFR_RNDN);
  mpfr_mul(r.im.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_mul(t.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(r.im.get(), r.im.get(), t.get(), MPFR_RNDN);
  return r;
}

CFloat csub(const CFloat& a, const CFloat& b, long bits) {
  CFloat r(bits);
  mpfr_sub(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_sub(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  return r;
}

CFloat cadd(const CFloat& a, const CFloat& b, long bits) {
  CFloat r(bits);
  mpfr_add(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  return r;
}

// Returns nullopt for a zero divisor.
std::optional<CFloat> cdiv(const CFloat& a, const CFloat& b, long bits) {
  Float den(bits);
  Float t(bits);
  mpfr_sqr(den.get(), b.re.get(), MPFR_RNDN);
  mpfr_sqr(t.get(), b.im.get(), MPFR_RNDN);
  mpfr_add(den.get(), den.get(), t.get(), MPFR_RNDN);
  if (den.is_zero()) return std::nullopt;
  CFloat conj_b(bits);
  mpfr_set(conj_b.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_neg(conj_b.im.get(), b.im.get(), MPFR_RNDN);
  CFloat r = cmul(a, conj_b, bits);
  mpfr_div(r.re.get(), r.re.get(), den.get(), MPFR_RNDN);
  mpfr_div(r.im.get(), r.im.get(), den.get(), MPFR_RNDN);
  return r;
}

Float cabs(const CFloat& a, long bits) {
  Float r(bits);
  mpfr_hypot(r.get(), a.re.get(), a.im.get(), MPFR_RNDN);
  return r;
}

// P(z) and P'(z) by Horner.
std::pair<CFloat, CFloat> eval_with_derivative(const IntPolynomial& p, const CFloat& z, long bits) {
  CFloat value(bits);
  CFloat deriv(bits);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    deriv = cadd(cmul(deriv, z, bits), value, bits);
    value = cmul(value, z, bits);
    mpfr_add_z(value.re.get(), value.re.get(), it->get_mpz_t(), MPFR_RNDN);
  }
  return {std::move(value), std::move(deriv)};
}

std::vector<CFloat> initial_guesses(const IntPolynomial& p, long bits) {
  const long d = p.degree();
  // Circle of radius (|a_0| / |a_d|)^(1/d), the geometric mean of the root moduli.
  Float radius(bits);
  if (p.coeffs().front() == 0) {
    mpfr_set_ui(radius.get(), 1, MPFR_RNDN);
  } else {
    Float a0 = Float::from_z(abs(p.coeffs().front()), bits, MPFR_RNDN);
    Float ad = Float::from_z(abs(p.leading()), bits, MPFR_RNDN);
    mpfr_div(radius.get(), a0.get(), ad.get(), MPFR_RNDN);
    mpfr_rootn_ui(radius.get(), radius.get(), static_cast<unsigned long>(d), MPFR_RNDN);
  }
  Float two_pi(bits);
  mpfr_const_pi(two_pi.get(), MPFR_RNDN);
  mpfr_mul_2ui(two_pi.get(), two_pi.get(), 1, MPFR_RNDN);
  std::vector<CFloat> zs;
  zs.reserve(static_cast<std::size_t>(d));
  for (long k = 0; k < d; ++k) {
    Float angle(bits);
    mpfr_mul_si(angle.get(), two_pi.get(), k, MPFR_RNDN);
    mpfr_div_si(angle.get(), angle.get(), d, MPFR_RNDN);
    Float offset = Float::from_si(4, bits);
    mpfr_div_ui(offset.get(), offset.get(), 10, MPFR_RNDN);
    mpfr_add(angle.get(), angle.get(), offset.get(), MPFR_RNDN);
    CFloat z(bits);
    mpfr_sin_cos(z.im.get(), z.re.get(), angle.get(), MPFR_RNDN);
    mpfr_mul(z.re.get(), z.re.get(), radius.get(), MPFR_RNDN);
    mpfr_mul(z.im.get(), z.im.get(), radius.get(), MPFR_RNDN);
    zs.push_back(std::move(z));
  }
  return zs;
}

// Simultaneous Aberth iteration; returns true once every correction is below 2^-(bits-8).
bool aberth(const IntPolynomial& p, std::vector<CFloat>& zs, long bits, int max_iter) {
  const std::size_t d = zs.size();
  Float tol(kRadiusBits);
  for (int iter = 0; iter < max_iter; ++iter) {
    bool converged = true;
    for (std::size_t i = 0; i < d; ++i) {
      auto [value, deriv] = eval_with_derivative(p, zs[i], bits);
      if (value.re.is_zero() && value.im.is_zero()) continue;
      auto newton = cdiv(value, deriv, bits);
      CFloat correction(bits);
      if (!newton) {
        // Stationary point: nudge off it.
        mpfr_set_ui_2exp(correction.re.get(), 1, -bits / 4, MPFR_RNDN);
        mpfr_set_ui_2exp(correction.im.get(), 1, -bits / 4, MPFR_RNDN);
        converged = false;
      } else {
        CFloat sum(bits);
        for (std::size_t j = 0; j < d; ++j) {
          if (j == i) continue;
          CFloat one(bits);
          mpfr_set_ui(one.re.get(), 1, MPFR_RNDN);
          auto inv = cdiv(one, csub(zs[i], zs[j], bits), bits);
          if (inv) sum = cadd(sum, *inv, bits);
        }
        CFloat one(bits);
        mpfr_set_ui(one.re.get(), 1, MPFR_RNDN);
        auto denom = csub(one, cmul(*newton, sum, bits), bits);
        auto w = cdiv(*newton, denom, bits);
        correction = w ? std::move(*w) : std::move(*newton);
        // |w| <= 2^-(bits-8) max(1, |z|)
        Float size = cabs(correction, bits);
        Float scale = cabs(zs[i], bits);
        if (mpfr_cmp_ui(scale.get(), 1) < 0) mpfr_set_ui(scale.get(), 1, MPFR_RNDN);
        mpfr_mul_2si(scale.get(), scale.get(), -(bits - 8), MPFR_RNDN);
        if (size > scale) converged = false;
      }
      zs[i] = csub(zs[i], correction, bits);
    }
    if (converged) return true;
  }
  return false;
}

struct Certified {
  std::vector<BallComplex> boxes;
  bool ok = false;
};

// Weierstrass discs D(z_i, d |W_i|), W_i = P(z_i) / (a_d prod_{j!=i}(z_i - z_j)).
Certified certify(const IntPolynomial& p, const std::vector<CFloat>& zs, long bits) {
  const Precision prec(bits, std::max<long>(bits, kDefaultBitsCap));
  const std::size_t d = zs.size();
  std::vector<BallComplex> points;
  points.reserve(d);
  for (const auto& z : zs) points.emplace_back(BallReal(z.re, Float()), BallReal(z.im, Float()));
  Certified out;
  out.boxes.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    BallComplex value = eval_ball(p, points[i], prec);
    BallComplex den(BallReal::exact(p.leading()));
    for (std::size_t j = 0; j < d; ++j) {
      if (j != i) den = mul(den, sub(points[i], points[j], prec), prec);
    }
    if (den.contains_zero()) return out;
    BallReal w = abs_ball(div(value, den, prec), prec);
    Float rho(kRadiusBits);
    mpfr_mul_ui(rho.get(), w.mag().get(), static_cast<unsigned long>(d), MPFR_RNDU);
    out.boxes.emplace_back(BallReal(zs[i].re, rho), BallReal(zs[i].im, rho));
  }
  out.ok = true;
  return out;
}

bool certainly_disjoint(const BallReal& a, const BallReal& b) {
  return certainly_less(a, b) || certainly_less(b, a);
}

bool certainly_disjoint(const BallComplex& a, const BallComplex& b) {
  return certainly_disjoint(a.re, b.re) || certainly_disjoint(a.im, b.im);
}

// log2 of a lower bound on half the minimal distance between distinct real
// parts of roots. 2 Re(alpha) = alpha + conj(alpha) is a root of
// S(t) = Res_z(P(z), P(t - z)), of degree D = d^2 with leading coefficient
// a_d^(2d); distinct roots of S are at least
// sqrt(3) D^(-(D+2)/2) M(S)^(1-D) apart (Mahler), M the Mahler measure.
Float real_part_separation_log2(const IntPolynomial& p, const std::vector<BallComplex>& boxes,
                                long bits) {
  const Precision prec(bits, std::max<long>(bits, kDefaultBitsCap));
  const long d = p.degree();
  const long big_d = d * d;
  Float log_m(kRadiusBits);  // upper bound of log2 M(S)
  Float t(kRadiusBits);
  Float lead = Float::from_z(abs(p.leading()), kRadiusBits, MPFR_RNDU);
  mpfr_log2(t.get(), lead.get(), MPFR_RNDU);
  mpfr_mul_si(log_m.get(), t.get(), 2 * d, MPFR_RNDU);
  for (const auto& a : boxes) {
    for (const auto& b : boxes) {
      Float m = abs_ball(add(a, b, prec), prec).mag();
      if (mpfr_cmp_ui(m.get(), 1) > 0) {
        mpfr_log2(t.get(), m.get(), MPFR_RNDU);
        mpfr_add(log_m.get(), log_m.get(), t.get(), MPFR_RNDU);
      }
    }
  }
  Float result(kRadiusBits);
  Float log_d = Float::from_si(big_d, kRadiusBits);
  mpfr_log2(log_d.get(), log_d.get(), MPFR_RNDU);
  mpfr_mul_si(result.get(), log_d.get(), big_d + 2, MPFR_RNDU);
  mpfr_div_2ui(result.get(), result.get(), 1, MPFR_RNDU);
  mpfr_mul_si(t.get(), log_m.get(), big_d - 1, MPFR_RNDU);
  mpfr_add(result.get(), result.get(), t.get(), MPFR_RNDU);
  mpfr_add_ui(result.get(), result.get(), 1, MPFR_RNDU);  // halve the distance
  mpfr_neg(result.get(), result.get(), MPFR_RNDD);
  return result;
}

enum class Order { less, greater, unknown };

struct Ordering {
  std::vector<BallComplex> sorted;
  bool ok = false;
};

Ordering order_roots(const IntPolynomial& p, std::vector<BallComplex> boxes, long bits) {
  const std::size_t d = boxes.size();
  Ordering out;
  // Conjugation structure: partner[i] = index of conj(root_i).
  std::vector<std::size_t> partner(d);
  for (std::size_t i = 0; i < d; ++i) {
    const BallComplex c = conj(boxes[i]);
    std::size_t hits = 0;
    for (std::size_t j = 0; j < d; ++j) {
      if (!certainly_disjoint(c, boxes[j])) {
        partner[i] = j;
        ++hits;
      }
    }
    if (hits != 1) return out;
  }
  for (std::size_t i = 0; i < d; ++i) {
    if (partner[i] == i) {
      boxes[i].im = BallReal();
    } else if (boxes[i].im.contains_zero()) {
      return out;
    }
  }
  std::optional<Float> sep_log2;
  auto compare = [&](std::size_t i, std::size_t j) -> Order {
    const BallComplex& a = boxes[i];
    const BallComplex& b = boxes[j];
    if (certainly_less(a.re, b.re)) return Order::less;
    if (certainly_less(b.re, a.re)) return Order::greater;
    bool equal_re = partner[i] == j;
    if (!equal_re && !(partner[i] == i && partner[j] == j)) {
      if (!sep_log2) sep_log2 = real_part_separation_log2(p, boxes, bits);
      const Precision prec(bits, std::max<long>(bits, kDefaultBitsCap));
      Float gap = sub(a.re, b.re, prec).mag();
      if (gap.is_zero()) {
        equal_re = true;
      } else {
        Float lg(kRadiusBits);
        mpfr_log2(lg.get(), gap.get(), MPFR_RNDU);
        equal_re = lg < *sep_log2;
      }
    }
    if (!equal_re) return Order::unknown;
    if (certainly_less(a.im, b.im)) return Order::less;
    if (certainly_less(b.im, a.im)) return Order::greater;
    return Order::unknown;
  };
  std::vector<std::size_t> idx(d);
  std::iota(idx.begin(), idx.end(), 0);
  // Insertion sort keeps the comparison count small and lets us bail out on ties.
  for (std::size_t k = 1; k < d; ++k) {
    std::size_t m = k;
    while (m > 0) {
      const Order o = compare(idx[m - 1], idx[m]);
      if (o == Order::unknown) return out;
      if (o == Order::less) break;
      std::swap(idx[m - 1], idx[m]);
      --m;
    }
  }
  // Every adjacent pair was decided; check the full chain for a total order.
  for (std::size_t k = 1; k < d; ++k) {
    if (compare(idx[k - 1], idx[k]) != Order::less) return out;
  }
  out.sorted.reserve(d);
  for (std::size_t i : idx) out.sorted.push_back(boxes[i]);
  out.ok = true;
  return out;
}

bool all_disjoint(const std::vector<BallComplex>& boxes) {
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    for (std::size_t j = i + 1; j < boxes.size(); ++j) {
      if (!certainly_disjoint(boxes[i], boxes[j])) return false;
    }
  }
  return true;
}

bool radii_within(const std::vector<BallComplex>& boxes, long half_bits) {
  const Float limit = Float::pow2(-half_bits);
  for (const auto& b : boxes) {
    if (b.max_rad() > limit) return false;
  }
  return true;
}

std::vector<mpz_class> positive_divisors(const mpz_class& n) {
  std::vector<mpz_class> small;
  std::vector<mpz_class> large;
  const mpz_class m = abs(n);
  for (mpz_class k = 1; k * k <= m; ++k) {
    if (m % k == 0) {
      small.push_back(k);
      if (k * k != m) large.push_back(m / k);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Any rational root p/q of P has p | a_0 and q | a_d.
bool has_rational_root(const IntPolynomial& p) {
  const auto num = positive_divisors(p.coeffs().front());
  const auto den = positive_divisors(p.leading());
  for (const auto& q : den) {
    for (const auto& a : num) {
      if (gcd(a, q) != 1) continue;
      for (int sign : {1, -1}) {
        const mpq_class x(sign * a, q);
        if (p.evaluate(GaussianRational(x)).is_zero()) return true;
      }
    }
  }
  return false;
}

enum class FactorSearch { found, none, ambiguous };

// Searches for a factor c * prod_{r in S}(z - r), |S| = m <= d/2, among certified roots.
FactorSearch search_factor(const IntPolynomial& p, const std::vector<BallComplex>& roots,
                           long bits) {
  const Precision prec(bits, std::max<long>(bits, kDefaultBitsCap));
  const std::size_t d = roots.size();
  const auto divisors = positive_divisors(p.leading());
  bool ambiguous = false;
  std::vector<BallComplex> subset;
  for (std::size_t m = 1; m <= d / 2; ++m) {
    std::vector<std::size_t> comb(m);
    std::iota(comb.begin(), comb.end(), 0);
    for (;;) {
      subset.clear();
      for (std::size_t i : comb) subset.push_back(roots[i]);
      const auto e = elementary_symmetric(std::span<const BallComplex>(subset), prec);
      for (const auto& c : divisors) {
        std::vector<mpz_class> coeffs(m + 1);
        bool excluded = false;
        bool unsure = false;
        for (std::size_t k = 0; k <= m && !excluded; ++k) {
          // coefficient of z^(m-k) is (-1)^k e_k
          BallComplex v = mul(e[k], c, prec);
          if (k % 2 == 1) v = neg(v);
          if (!v.im.contains_zero()) {
            excluded = true;
            break;
          }
          mpz_class nearest;
          Float rounded(v.re.mid().bits());
          mpfr_round(rounded.get(), v.re.mid().get());
          mpfr_get_z(nearest.get_mpz_t(), rounded.get(), MPFR_RNDN);
          if (!v.re.contains(mpq_class(nearest))) {
            excluded = true;
            break;
          }
          if (v.re.rad() >= Float::pow2(-2) || v.im.rad() >= Float::pow2(-2)) unsure = true;
          coeffs[m - k] = nearest;
        }
        if (excluded) continue;
        if (unsure) {
          ambiguous = true;
          continue;
        }
        if (divides(IntPolynomial(coeffs), p)) return FactorSearch::found;
      }
      // next combination
      std::size_t pos = m;
      while (pos > 0 && comb[pos - 1] == d - m + pos - 1) --pos;
      if (pos == 0) break;
      ++comb[pos - 1];
      for (std::size_t k = pos; k < m; ++k) comb[k] = comb[k - 1] + 1;
    }
  }
  return ambiguous ? FactorSearch::ambiguous : FactorSearch::none;
}

}  // namespace

std::vector<BallComplex> roots_of(const IntPolynomial& p, Precision prec) {
  const long d = p.degree();
  if (d < 1) throw std::invalid_argument("roots_of requires degree >= 1");
  const long half_bits = (prec.bits() + 1) / 2;
  if (d == 1) {
    const mpq_class root(-p.coeffs()[0], p.coeffs()[1]);
    const long scale =
        static_cast<long>(mpz_sizeinbase(root.get_num_mpz_t(), 2)) + half_bits + 8;
    return {BallComplex(BallReal::from_rational(root, prec.with_bits(std::max(scale, prec.bits()))))};
  }
  long bits = std::max<long>(64, half_bits + 32);
  std::vector<CFloat> zs = initial_guesses(p, bits);
  int iterations = 200 + 20 * static_cast<int>(d);
  for (;;) {
    aberth(p, zs, bits, iterations);
    Certified cert = certify(p, zs, bits);
    if (cert.ok && all_disjoint(cert.boxes) && radii_within(cert.boxes, half_bits)) {
      Ordering ord = order_roots(p, std::move(cert.boxes), bits);
      if (ord.ok) return std::move(ord.sorted);
    }
    if (bits * 2 > prec.cap()) {
      throw IsolationFailure("root isolation failed for " + to_text(p) + " below " +
                             std::to_string(prec.cap()) + " bits");
    }
    bits *= 2;
    for (auto& z : zs) set_prec(z, bits);
    iterations = 50 + 4 * static_cast<int>(d);
  }
}

bool is_irreducible(const IntPolynomial& poly) {
  if (poly.degree() < 1) throw std::invalid_argument("is_irreducible requires degree >= 1");
  const IntPolynomial p = primitive_part(poly);
  if (p.degree() == 1) return true;
  if (p.coeffs().front() == 0) return false;
  const RatPolynomial rp = to_rational(p);
  if (gcd(rp, rp.derivative()).degree() >= 1) return false;
  if (has_rational_root(p)) return false;
  if (p.degree() <= 3) return true;
  for (long bits = 128;; bits *= 2) {
    const auto roots = roots_of(p, Precision(bits));
    switch (search_factor(p, roots, 2 * bits)) {
      case FactorSearch::found: return false;
      case FactorSearch::none: return true;
      case FactorSearch::ambiguous: break;
    }
    if (bits > kDefaultBitsCap / 4) throw IsolationFailure("irreducibility undecided for " + to_text(p));
  }
}

}  // namespace transkit
