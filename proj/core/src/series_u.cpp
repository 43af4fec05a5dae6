#include "transkit/series_u.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "transkit/errors.hpp"

namespace transkit {

namespace {

// Running state of the product, the symmetric functions and the powers of w
// after n terms. Summation order is ascending n.
class TermStream {
 public:
  TermStream(QbarEnumeration& e, const UPoint& w, const UPoint& z, Precision prec)
      : e_(e),
        w_(w.at(e, prec.bits() + 8)),
        z_(z),
        prec_(prec),
        zb_(z.at(e, prec.bits() + 8)),
        absw_(abs_ball(w_, prec)) {
    sym_.push_back(BallComplex::exact(1));
  }

  /// Term n+1; after a structural zero every further term is exactly 0.
  BallComplex next() {
    ++n_;
    if (vanished_) return {};
    if (z_.equals(e_, static_cast<std::size_t>(n_))) {
      vanished_ = true;
      return {};
    }
    const BallComplex& a = e_.approx(static_cast<std::size_t>(n_), prec_.bits() + 8);
    prod_ = mul(prod_, sub(zb_, a, prec_), prec_);
    sym_.emplace_back();
    for (std::size_t k = sym_.size() - 1; k >= 1; --k) sym_[k] = add(sym_[k], mul(sym_[k - 1], a, prec_), prec_);
    BallReal length = BallReal::exact(1);
    for (std::size_t k = 1; k < sym_.size(); ++k) length = add(length, abs_ball(sym_[k], prec_), prec_);
    wpow_ = mul(wpow_, w_, prec_);
    absw_pow_ = mul(absw_pow_, absw_, prec_);
    fact_ *= n_;
    const BallReal denom = mul(mul(length, add(absw_pow_, mpz_class(1), prec_), prec_), fact_, prec_);
    return div(mul(wpow_, prod_, prec_), denom, prec_);
  }

  long n() const { return n_; }
  bool vanished() const { return vanished_; }

 private:
  QbarEnumeration& e_;
  BallComplex w_;
  const UPoint& z_;
  Precision prec_;
  BallComplex zb_;
  BallReal absw_;
  long n_ = 0;
  bool vanished_ = false;
  BallComplex prod_ = BallComplex::exact(1);
  std::vector<BallComplex> sym_;
  BallComplex wpow_ = BallComplex::exact(1);
  BallReal absw_pow_ = BallReal::exact(1);
  mpz_class fact_ = 1;
};

long bit_length(long v) {
  long b = 0;
  while (v > 0) {
    ++b;
    v >>= 1;
  }
  return b;
}

}  // namespace

UPoint UPoint::alpha(std::size_t j) {
  if (j == 0) throw std::invalid_argument("enumeration index is 1-based");
  return UPoint(j);
}

bool UPoint::is_zero() const {
  if (const auto* b = std::get_if<BallComplex>(&value_)) {
    return b->is_exact() && b->re.mid().is_zero() && b->im.mid().is_zero();
  }
  if (const auto* g = std::get_if<GaussianRational>(&value_)) return g->is_zero();
  return false;
}

BallComplex UPoint::at(QbarEnumeration& e, long bits) const {
  if (const auto* b = std::get_if<BallComplex>(&value_)) return *b;
  if (const auto* g = std::get_if<GaussianRational>(&value_)) {
    return g->to_ball(Precision(std::max(bits, kMinBits)));
  }
  return e.approx(std::get<std::size_t>(value_), bits);
}

bool UPoint::equals(QbarEnumeration& e, std::size_t k) const {
  if (const auto* j = std::get_if<std::size_t>(&value_)) return *j == k;
  const auto* g = std::get_if<GaussianRational>(&value_);
  if (g == nullptr) return false;
  const AlgebraicNumber& a = e.at(k);
  if (g->im == 0) return a.is_rational() && a.rational_value() == g->re;
  if (a.degree() != 2) return false;
  // a + bi is the root with sign(b) of (x - a)^2 + b^2.
  const RatPolynomial m(std::vector<mpq_class>{g->re * g->re + g->im * g->im, -2 * g->re, mpq_class(1)});
  return primitive_part(m) == a.minpoly && a.root_index == (g->im > 0 ? 1u : 0u);
}

BallComplex u_term(QbarEnumeration& e, long n, const UPoint& w, const UPoint& z, Precision prec) {
  if (n < 1) throw std::invalid_argument("u_term requires n >= 1");
  if (z.is_alpha() && z.alpha_index() <= static_cast<std::size_t>(n)) return {};
  if (w.is_zero()) return {};
  TermStream s(e, w, z, prec);
  BallComplex t;
  for (long k = 1; k <= n; ++k) t = s.next();
  return t;
}

BallComplex u_term(QbarEnumeration& e, long n, const BallComplex& w, const UPoint& z, Precision prec) {
  return u_term(e, n, UPoint::ball(w), z, prec);
}

UEvaluation u_eval(QbarEnumeration& e, const UPoint& w, const UPoint& z, const Float& target_radius,
                   long cap) {
  if (target_radius.sign() <= 0) throw std::invalid_argument("target radius must be positive");
  UEvaluation out;
  out.enumeration_id = std::string(QbarEnumeration::kId);
  if (w.is_zero() || (z.is_alpha() && z.alpha_index() == 1)) {
    out.exact_path = true;
    return out;
  }
  Float half(kRadiusBits);
  mpfr_div_2ui(half.get(), target_radius.get(), 1, MPFR_RNDD);

  // Truncation: smallest N with M^(N+1)/(N+1)! e^M <= target/2, unless the
  // point is alpha_j and the series stops at j - 1.
  long N = 0;
  Float tail(kRadiusBits);
  Float m_upper(kRadiusBits);
  if (z.is_alpha()) {
    N = static_cast<long>(z.alpha_index()) - 1;
  } else {
    const BallComplex zb = z.at(e, 64);
    m_upper = max_of(abs_ball(zb, Precision(64)).upper(), Float::from_si(1, kRadiusBits));
    mpfr_exp(tail.get(), m_upper.get(), MPFR_RNDU);
    tail = mul_up(tail, m_upper);
    while (tail > half) {
      ++N;
      tail = mul_up(tail, m_upper);
      mpfr_div_si(tail.get(), tail.get(), N + 1, MPFR_RNDU);
    }
  }

  const long magnitude_bits = z.is_alpha() ? 8 : static_cast<long>(std::ceil(mpfr_get_d(m_upper.get(), MPFR_RNDU) * 1.5));
  long bits = Precision::bits_for_radius(half, 16) + magnitude_bits + 2 * bit_length(N + 1);
  for (;;) {
    if (bits > cap) throw PrecisionCapExceeded(bits, cap);
    const Precision prec(bits, cap);
    TermStream s(e, w, z, prec);
    BallComplex sum;
    while (s.n() < N) {
      sum = add(sum, s.next(), prec);
      if (s.vanished()) break;
    }
    if (s.vanished()) {
      out.truncation_N = s.n() - 1;
      out.tail_bound = Float(kRadiusBits);
      out.exact_path = true;
    } else {
      out.truncation_N = N;
      out.tail_bound = z.is_alpha() ? Float(kRadiusBits) : tail;
      out.exact_path = z.is_alpha();
    }
    if (sum.max_rad() <= half) {
      out.value = inflate(sum, out.tail_bound);
      out.bits = bits;
      return out;
    }
    bits *= 2;
  }
}

UEvaluation u_eval(QbarEnumeration& e, const BallComplex& w, const UPoint& z, const Float& target_radius,
                   long cap) {
  return u_eval(e, UPoint::ball(w), z, target_radius, cap);
}

BallComplex u_finite_sum(QbarEnumeration& e, const UPoint& w, std::size_t t, Precision prec) {
  if (t == 0 || w.is_zero()) return {};
  const UPoint z = UPoint::ball(e.approx(t + 1, prec.bits() + 8));
  TermStream s(e, w, z, prec);
  BallComplex sum;
  for (std::size_t n = 1; n <= t; ++n) sum = add(sum, s.next(), prec);
  return sum;
}

BallComplex u_finite_sum(QbarEnumeration& e, const BallComplex& w, std::size_t t, Precision prec) {
  return u_finite_sum(e, UPoint::ball(w), t, prec);
}

UBoundCheck u_bound_check(QbarEnumeration& e, const UPoint& w, const UPoint& z, Precision start) {
  for (long bits = start.bits();; bits *= 2) {
    const Precision prec(bits, start.cap());
    const UEvaluation u = u_eval(e, w, z, Float::pow2(-bits), start.cap());
    const BallComplex zb = z.at(e, bits);
    const BallReal m = max(BallReal::exact(1), abs_ball(zb, prec), prec);
    const BallReal bound = exp(m, prec);
    UBoundCheck out;
    out.margin = sub(bound, abs_ball(u.value, prec), prec);
    out.bits = bits;
    if (out.margin.lower().sign() >= 0) {
      out.holds = true;
      return out;
    }
    if (out.margin.upper().sign() < 0) return out;
    if (bits * 2 > start.cap()) throw Undecidable("growth bound undecided at the precision cap");
  }
}

}  // namespace transkit
