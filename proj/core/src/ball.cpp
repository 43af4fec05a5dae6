#include "transkit/ball.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "transkit/errors.hpp"

namespace transkit {
namespace {

// Bound on |exact - mid| after one correctly rounded (RNDN) operation at `bits`.
Float rounding_error(const Float& mid, int ternary, long bits) {
  Float err(kRadiusBits);
  if (ternary == 0) return err;
  if (mid.is_zero()) {
    mpfr_set_ui_2exp(err.get(), 1, mpfr_get_emin(), MPFR_RNDU);
    return err;
  }
  mpfr_abs(err.get(), mid.get(), MPFR_RNDU);
  mpfr_mul_2si(err.get(), err.get(), -bits, MPFR_RNDU);
  return err;
}

Float abs_down(const Float& a) {
  Float r(kRadiusBits);
  mpfr_abs(r.get(), a.get(), MPFR_RNDD);
  return r;
}

BallReal finish(Float mid, int ternary, Float rad, long bits) {
  Float err = rounding_error(mid, ternary, bits);
  if (!err.is_zero()) rad = add_up(rad, err);
  return BallReal(std::move(mid), std::move(rad));
}

}  // namespace

// ---------------------------------------------------------------------------
// Precision

Precision::Precision(long bits, long cap) : bits_(bits), cap_(cap) {
  if (bits < kMinBits) {
    throw std::invalid_argument("precision must be at least " + std::to_string(kMinBits) +
                                " bits");
  }
  if (cap < kMinBits) throw std::invalid_argument("precision cap below minimum");
  if (bits > cap) throw PrecisionCapExceeded(bits, cap);
}

long Precision::bits_for_radius(const Float& radius, long guard) {
  if (radius.sign() <= 0 || !radius.is_finite()) {
    throw std::invalid_argument("target radius must be positive and finite");
  }
  // radius >= 2^(e-1)
  const long e = static_cast<long>(mpfr_get_exp(radius.get()));
  return std::max<long>(kMinBits, 1 - e + guard);
}

// ---------------------------------------------------------------------------
// BallReal

BallReal::BallReal() : mid_(kRadiusBits), rad_(kRadiusBits) {}

BallReal::BallReal(Float mid, Float rad) : mid_(std::move(mid)), rad_(std::move(rad)) {
  if (rad_.sign() < 0 || !rad_.is_finite() || !mid_.is_finite()) {
    throw std::invalid_argument("ball radius must be finite and non-negative");
  }
  if (rad_.bits() != kRadiusBits) {
    Float r(kRadiusBits);
    mpfr_set(r.get(), rad_.get(), MPFR_RNDU);
    rad_ = std::move(r);
  }
}

BallReal BallReal::exact(long value) {
  return BallReal(Float::from_si(value, kRadiusBits), Float(kRadiusBits));
}

BallReal BallReal::exact(const mpz_class& value) {
  const auto bits = std::max<long>(kMinBits, static_cast<long>(mpz_sizeinbase(value.get_mpz_t(), 2)));
  return BallReal(Float::from_z(value, bits, MPFR_RNDN), Float(kRadiusBits));
}

BallReal BallReal::from_rational(const mpq_class& value, Precision prec) {
  Float mid(prec.bits());
  const int t = mpfr_set_q(mid.get(), value.get_mpq_t(), MPFR_RNDN);
  return finish(std::move(mid), t, Float(kRadiusBits), prec.bits());
}

BallReal BallReal::from_endpoints(const Float& lo, const Float& hi, Precision prec) {
  if (hi < lo) throw std::invalid_argument("ball endpoints out of order");
  Float mid(prec.bits());
  if (lo == hi) {
    mpfr_set(mid.get(), lo.get(), MPFR_RNDN);
  } else {
    Float sum(std::max<long>(std::max(lo.bits(), hi.bits()), prec.bits()) + 2);
    mpfr_add(sum.get(), lo.get(), hi.get(), MPFR_RNDN);
    mpfr_div_2ui(mid.get(), sum.get(), 1, MPFR_RNDN);
  }
  Float up(kRadiusBits);
  Float down(kRadiusBits);
  mpfr_sub(up.get(), hi.get(), mid.get(), MPFR_RNDU);
  mpfr_sub(down.get(), mid.get(), lo.get(), MPFR_RNDU);
  Float rad = max_of(up, down);
  if (rad.sign() < 0) mpfr_set_zero(rad.get(), 1);
  return BallReal(std::move(mid), std::move(rad));
}

Float BallReal::lower() const {
  Float r(std::max<long>(mid_.bits(), kRadiusBits));
  mpfr_sub(r.get(), mid_.get(), rad_.get(), MPFR_RNDD);
  return r;
}

Float BallReal::upper() const {
  Float r(std::max<long>(mid_.bits(), kRadiusBits));
  mpfr_add(r.get(), mid_.get(), rad_.get(), MPFR_RNDU);
  return r;
}

Float BallReal::mag() const { return add_up(abs_up(mid_), rad_); }

Float BallReal::mig() const {
  Float r = sub_down(abs_down(mid_), rad_);
  if (r.sign() < 0) mpfr_set_zero(r.get(), 1);
  return r;
}

bool BallReal::contains_zero() const { return mpfr_cmpabs(mid_.get(), rad_.get()) <= 0; }

bool BallReal::is_positive() const { return mpfr_cmp(mid_.get(), rad_.get()) > 0; }

bool BallReal::contains(const mpq_class& value) const {
  mpq_class d = value - mid_.to_rational();
  return abs(d) <= rad_.to_rational();
}

bool BallReal::contains(const BallReal& other) const {
  const mpq_class m = mid_.to_rational();
  const mpq_class r = rad_.to_rational();
  const mpq_class om = other.mid_.to_rational();
  const mpq_class orad = other.rad_.to_rational();
  return om - orad >= m - r && om + orad <= m + r;
}

std::string BallReal::to_string(std::size_t digits) const {
  return mid_.to_decimal(digits) + " +/- " + rad_.to_decimal(3, MPFR_RNDU);
}

bool overlaps(const BallReal& a, const BallReal& b) {
  mpq_class d = a.mid().to_rational() - b.mid().to_rational();
  return abs(d) <= a.rad().to_rational() + b.rad().to_rational();
}

bool certainly_less(const BallReal& a, const BallReal& b) { return a.upper() < b.lower(); }

// ---------------------------------------------------------------------------
// Real arithmetic

BallReal neg(const BallReal& a) {
  Float mid(a.mid());
  mpfr_neg(mid.get(), mid.get(), MPFR_RNDN);
  return BallReal(std::move(mid), a.rad());
}

BallReal add(const BallReal& a, const BallReal& b, Precision prec) {
  Float mid(prec.bits());
  const int t = mpfr_add(mid.get(), a.mid().get(), b.mid().get(), MPFR_RNDN);
  return finish(std::move(mid), t, add_up(a.rad(), b.rad()), prec.bits());
}

BallReal sub(const BallReal& a, const BallReal& b, Precision prec) {
  Float mid(prec.bits());
  const int t = mpfr_sub(mid.get(), a.mid().get(), b.mid().get(), MPFR_RNDN);
  return finish(std::move(mid), t, add_up(a.rad(), b.rad()), prec.bits());
}

BallReal mul(const BallReal& a, const BallReal& b, Precision prec) {
  Float mid(prec.bits());
  const int t = mpfr_mul(mid.get(), a.mid().get(), b.mid().get(), MPFR_RNDN);
  Float rad(kRadiusBits);
  if (!a.rad().is_zero() || !b.rad().is_zero()) {
    rad = add_up(add_up(mul_up(abs_up(a.mid()), b.rad()), mul_up(abs_up(b.mid()), a.rad())),
                 mul_up(a.rad(), b.rad()));
  }
  return finish(std::move(mid), t, std::move(rad), prec.bits());
}

BallReal div(const BallReal& a, const BallReal& b, Precision prec) {
  if (b.contains_zero()) throw DivisorContainsZero();
  Float mid(prec.bits());
  const int t = mpfr_div(mid.get(), a.mid().get(), b.mid().get(), MPFR_RNDN);
  Float rad(kRadiusBits);
  if (!a.rad().is_zero() || !b.rad().is_zero()) {
    Float num = add_up(mul_up(abs_up(a.mid()), b.rad()), mul_up(abs_up(b.mid()), a.rad()));
    Float bm = abs_down(b.mid());
    Float gap = sub_down(bm, b.rad());
    Float den(kRadiusBits);
    mpfr_mul(den.get(), bm.get(), gap.get(), MPFR_RNDD);
    mpfr_div(rad.get(), num.get(), den.get(), MPFR_RNDU);
  }
  return finish(std::move(mid), t, std::move(rad), prec.bits());
}

BallReal add(const BallReal& a, const mpz_class& b, Precision prec) {
  Float mid(prec.bits());
  const int t = mpfr_add_z(mid.get(), a.mid().get(), b.get_mpz_t(), MPFR_RNDN);
  return finish(std::move(mid), t, a.rad(), prec.bits());
}

BallReal mul(const BallReal& a, const mpz_class& b, Precision prec) {
  Float mid(prec.bits());
  const int t = mpfr_mul_z(mid.get(), a.mid().get(), b.get_mpz_t(), MPFR_RNDN);
  Float rad(kRadiusBits);
  if (!a.rad().is_zero()) {
    mpz_class mag = abs(b);
    mpfr_mul_z(rad.get(), a.rad().get(), mag.get_mpz_t(), MPFR_RNDU);
  }
  return finish(std::move(mid), t, std::move(rad), prec.bits());
}

BallReal mul(const BallReal& a, long b, Precision prec) {
  Float mid(prec.bits());
  const int t = mpfr_mul_si(mid.get(), a.mid().get(), b, MPFR_RNDN);
  Float rad(kRadiusBits);
  if (!a.rad().is_zero()) {
    mpfr_mul_si(rad.get(), a.rad().get(), b, MPFR_RNDU);
    mpfr_abs(rad.get(), rad.get(), MPFR_RNDU);
  }
  return finish(std::move(mid), t, std::move(rad), prec.bits());
}

BallReal mul_2si(const BallReal& a, long e) {
  Float mid(a.mid());
  Float rad(a.rad());
  mpfr_mul_2si(mid.get(), mid.get(), e, MPFR_RNDN);
  mpfr_mul_2si(rad.get(), rad.get(), e, MPFR_RNDU);
  return BallReal(std::move(mid), std::move(rad));
}

BallReal sqr(const BallReal& a, Precision prec) {
  if (!a.is_exact() && a.contains_zero()) {
    Float m = a.mag();
    Float hi(kRadiusBits);
    mpfr_sqr(hi.get(), m.get(), MPFR_RNDU);
    return BallReal::from_endpoints(Float(kRadiusBits), hi, prec);
  }
  return mul(a, a, prec);
}

BallReal sqrt(const BallReal& a, Precision prec) {
  if (a.upper().sign() < 0) throw std::domain_error("square root of a negative ball");
  if (a.is_exact()) {
    Float mid(prec.bits());
    const int t = mpfr_sqrt(mid.get(), a.mid().get(), MPFR_RNDN);
    return finish(std::move(mid), t, Float(kRadiusBits), prec.bits());
  }
  Float lo_in = a.lower();
  if (lo_in.sign() < 0) mpfr_set_zero(lo_in.get(), 1);
  Float lo(prec.bits());
  Float hi(prec.bits());
  mpfr_sqrt(lo.get(), lo_in.get(), MPFR_RNDD);
  mpfr_sqrt(hi.get(), a.upper().get(), MPFR_RNDU);
  return BallReal::from_endpoints(lo, hi, prec);
}

BallReal abs(const BallReal& a, Precision prec) {
  if (!a.contains_zero() || a.is_exact()) {
    return a.mid().sign() < 0 ? neg(a) : a;
  }
  return BallReal::from_endpoints(Float(kRadiusBits), a.mag(), prec);
}

BallReal exp(const BallReal& a, Precision prec) {
  Float mid(prec.bits());
  const int t = mpfr_exp(mid.get(), a.mid().get(), MPFR_RNDN);
  Float rad(kRadiusBits);
  if (!a.rad().is_zero()) {
    // |e^(m+d) - e^m| <= e^m (e^r - 1)
    Float em(kRadiusBits);
    Float growth(kRadiusBits);
    mpfr_exp(em.get(), a.mid().get(), MPFR_RNDU);
    mpfr_expm1(growth.get(), a.rad().get(), MPFR_RNDU);
    rad = mul_up(em, growth);
  }
  return finish(std::move(mid), t, std::move(rad), prec.bits());
}

BallReal log(const BallReal& a, Precision prec) {
  if (!a.is_positive()) throw std::domain_error("logarithm of a ball that is not strictly positive");
  if (a.is_exact()) {
    Float mid(prec.bits());
    const int t = mpfr_log(mid.get(), a.mid().get(), MPFR_RNDN);
    return finish(std::move(mid), t, Float(kRadiusBits), prec.bits());
  }
  Float lo(prec.bits());
  Float hi(prec.bits());
  mpfr_log(lo.get(), a.lower().get(), MPFR_RNDD);
  mpfr_log(hi.get(), a.upper().get(), MPFR_RNDU);
  return BallReal::from_endpoints(lo, hi, prec);
}

BallReal sin(const BallReal& a, Precision prec) {
  Float mid(prec.bits());
  const int t = mpfr_sin(mid.get(), a.mid().get(), MPFR_RNDN);
  return finish(std::move(mid), t, min_of(a.rad(), Float::from_si(2, kRadiusBits)), prec.bits());
}

BallReal cos(const BallReal& a, Precision prec) {
  Float mid(prec.bits());
  const int t = mpfr_cos(mid.get(), a.mid().get(), MPFR_RNDN);
  return finish(std::move(mid), t, min_of(a.rad(), Float::from_si(2, kRadiusBits)), prec.bits());
}

BallReal max(const BallReal& a, const BallReal& b, Precision prec) {
  if (a.lower() >= b.upper()) return a;
  if (b.lower() >= a.upper()) return b;
  return BallReal::from_endpoints(max_of(a.lower(), b.lower()), max_of(a.upper(), b.upper()), prec);
}

BallReal hull(const BallReal& a, const BallReal& b, Precision prec) {
  if (a.contains(b)) return a;
  if (b.contains(a)) return b;
  return BallReal::from_endpoints(min_of(a.lower(), b.lower()), max_of(a.upper(), b.upper()), prec);
}

BallReal intersect(const BallReal& a, const BallReal& b, Precision prec) {
  if (!overlaps(a, b)) throw std::invalid_argument("cannot intersect disjoint balls");
  if (a.contains(b)) return b;
  if (b.contains(a)) return a;
  Float lo = max_of(a.lower(), b.lower());
  Float hi = min_of(a.upper(), b.upper());
  if (hi < lo) std::swap(lo, hi);  // directed rounding can cross on touching balls
  return BallReal::from_endpoints(lo, hi, prec);
}

BallReal inflate(const BallReal& a, const Float& extra) {
  return BallReal(a.mid(), add_up(a.rad(), extra));
}

BallReal const_pi(Precision prec) {
  Float mid(prec.bits());
  const int t = mpfr_const_pi(mid.get(), MPFR_RNDN);
  return finish(std::move(mid), t, Float(kRadiusBits), prec.bits());
}

BallReal const_e(Precision prec) { return exp(BallReal::exact(1), prec); }

// ---------------------------------------------------------------------------
// Complex arithmetic

std::string BallComplex::to_string(std::size_t digits) const {
  return "(" + re.to_string(digits) + ") + (" + im.to_string(digits) + ")i";
}

bool overlaps(const BallComplex& a, const BallComplex& b) {
  return overlaps(a.re, b.re) && overlaps(a.im, b.im);
}

bool contains(const BallComplex& outer, const BallComplex& inner) {
  return outer.re.contains(inner.re) && outer.im.contains(inner.im);
}

BallComplex neg(const BallComplex& a) { return {neg(a.re), neg(a.im)}; }
BallComplex conj(const BallComplex& a) { return {a.re, neg(a.im)}; }

BallComplex add(const BallComplex& a, const BallComplex& b, Precision prec) {
  return {add(a.re, b.re, prec), add(a.im, b.im, prec)};
}

BallComplex sub(const BallComplex& a, const BallComplex& b, Precision prec) {
  return {sub(a.re, b.re, prec), sub(a.im, b.im, prec)};
}

BallComplex mul(const BallComplex& a, const BallComplex& b, Precision prec) {
  if (a.is_real() && b.is_real()) return BallComplex(mul(a.re, b.re, prec));
  if (b.is_real()) return mul(a, b.re, prec);
  if (a.is_real()) return mul(b, a.re, prec);
  BallReal re = sub(mul(a.re, b.re, prec), mul(a.im, b.im, prec), prec);
  BallReal im = add(mul(a.re, b.im, prec), mul(a.im, b.re, prec), prec);
  return {std::move(re), std::move(im)};
}

BallComplex mul(const BallComplex& a, const BallReal& b, Precision prec) {
  if (a.is_real()) return BallComplex(mul(a.re, b, prec));
  return {mul(a.re, b, prec), mul(a.im, b, prec)};
}

BallComplex mul(const BallComplex& a, const mpz_class& b, Precision prec) {
  if (a.is_real()) return BallComplex(mul(a.re, b, prec));
  return {mul(a.re, b, prec), mul(a.im, b, prec)};
}

BallComplex add(const BallComplex& a, const mpz_class& b, Precision prec) {
  return {add(a.re, b, prec), a.im};
}

BallComplex div(const BallComplex& a, const BallReal& b, Precision prec) {
  if (a.is_real()) return BallComplex(div(a.re, b, prec));
  return {div(a.re, b, prec), div(a.im, b, prec)};
}

BallComplex div(const BallComplex& a, const BallComplex& b, Precision prec) {
  if (b.contains_zero()) throw DivisorContainsZero();
  if (b.is_real()) return div(a, b.re, prec);
  BallReal den = add(sqr(b.re, prec), sqr(b.im, prec), prec);
  if (den.contains_zero()) throw DivisorContainsZero();
  return div(mul(a, conj(b), prec), den, prec);
}

BallComplex arith(ArithOp op, const BallComplex& a, const BallComplex& b, Precision prec) {
  switch (op) {
    case ArithOp::add: return add(a, b, prec);
    case ArithOp::sub: return sub(a, b, prec);
    case ArithOp::mul: return mul(a, b, prec);
    case ArithOp::div: return div(a, b, prec);
  }
  throw std::invalid_argument("unknown arithmetic operation");
}

BallComplex exp_ball(const BallComplex& z, Precision prec) {
  BallReal e = exp(z.re, prec);
  if (z.is_real()) return BallComplex(std::move(e));
  return {mul(e, cos(z.im, prec), prec), mul(e, sin(z.im, prec), prec)};
}

BallReal abs_ball(const BallComplex& z, Precision prec) {
  if (z.is_real()) return abs(z.re, prec);
  if (z.re.is_exact() && z.re.mid().is_zero()) return abs(z.im, prec);
  return sqrt(add(sqr(z.re, prec), sqr(z.im, prec), prec), prec);
}

BallComplex pow_int(const BallComplex& z, long k, Precision prec) {
  if (k < 0) throw std::invalid_argument("pow_int requires a non-negative exponent");
  BallComplex result = BallComplex::exact(1);
  BallComplex base = z;
  while (k > 0) {
    if (k & 1) result = mul(result, base, prec);
    k >>= 1;
    if (k > 0) base = mul(base, base, prec);
  }
  return result;
}

BallComplex intersect(const BallComplex& a, const BallComplex& b, Precision prec) {
  return {intersect(a.re, b.re, prec), intersect(a.im, b.im, prec)};
}

BallComplex inflate(const BallComplex& a, const Float& extra) {
  return {inflate(a.re, extra), inflate(a.im, extra)};
}

mpz_class factorial_exact(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

}  // namespace transkit
