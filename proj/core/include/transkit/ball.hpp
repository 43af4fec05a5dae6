#pragma once

// Midpoint-radius ("ball") arithmetic over MPFR.
//
// Every operation returns a ball enclosing the exact result of the operation
// applied to any pair of points drawn from its input balls. Midpoints carry the
// working precision, radii carry `kRadiusBits` and are rounded upward. Complex
// balls are rectangular boxes: the real and imaginary radii are tracked
// separately.

#include <gmpxx.h>

#include <string>

#include "transkit/float.hpp"

namespace transkit {

inline constexpr long kMinBits = 8;
inline constexpr long kDefaultBitsCap = 1L << 20;

/// Working mantissa precision with a hard cap.
class Precision {
 public:
  /// Throws std::invalid_argument for bits < kMinBits, PrecisionCapExceeded for bits > cap.
  explicit Precision(long bits, long cap = kDefaultBitsCap);

  long bits() const noexcept { return bits_; }
  long cap() const noexcept { return cap_; }

  /// Same cap, twice the bits. Throws PrecisionCapExceeded.
  Precision doubled() const { return Precision(bits_ * 2, cap_); }
  Precision with_bits(long bits) const { return Precision(bits, cap_); }

  /// Bits needed so that 2^-bits <= radius, plus `guard` extra bits.
  static long bits_for_radius(const Float& radius, long guard = 16);

 private:
  long bits_;
  long cap_;
};

class BallReal {
 public:
  /// Exact zero.
  BallReal();
  BallReal(Float mid, Float rad);

  static BallReal exact(long value);
  static BallReal exact(const mpz_class& value);
  /// Exact if the rational is dyadic and fits; otherwise rounded with a certified radius.
  static BallReal from_rational(const mpq_class& value, Precision prec);
  /// Smallest convenient ball containing [lo, hi].
  static BallReal from_endpoints(const Float& lo, const Float& hi, Precision prec);

  const Float& mid() const noexcept { return mid_; }
  const Float& rad() const noexcept { return rad_; }

  Float lower() const;
  Float upper() const;
  /// Upper bound on |x| over the ball.
  Float mag() const;
  /// Lower bound on |x| over the ball (0 if the ball contains 0).
  Float mig() const;

  bool is_exact() const noexcept { return rad_.is_zero(); }
  bool contains_zero() const;
  bool excludes_zero() const { return !contains_zero(); }
  bool is_positive() const;
  bool contains(const mpq_class& value) const;
  bool contains(const BallReal& other) const;

  /// "mid +/- rad" for diagnostics.
  std::string to_string(std::size_t digits = 20) const;

 private:
  Float mid_;
  Float rad_;
};

bool overlaps(const BallReal& a, const BallReal& b);
/// True if a's upper bound is strictly below b's lower bound.
bool certainly_less(const BallReal& a, const BallReal& b);

BallReal neg(const BallReal& a);
BallReal add(const BallReal& a, const BallReal& b, Precision prec);
BallReal sub(const BallReal& a, const BallReal& b, Precision prec);
BallReal mul(const BallReal& a, const BallReal& b, Precision prec);
/// Throws DivisorContainsZero.
BallReal div(const BallReal& a, const BallReal& b, Precision prec);
BallReal add(const BallReal& a, const mpz_class& b, Precision prec);
BallReal mul(const BallReal& a, const mpz_class& b, Precision prec);
BallReal mul(const BallReal& a, long b, Precision prec);
/// Multiplication by 2^e (exact).
BallReal mul_2si(const BallReal& a, long e);
/// Enclosure of {x^2}; the lower end is clamped at 0 when the ball straddles 0.
BallReal sqr(const BallReal& a, Precision prec);
/// Square root of the non-negative part of the ball.
BallReal sqrt(const BallReal& a, Precision prec);
BallReal abs(const BallReal& a, Precision prec);
BallReal exp(const BallReal& a, Precision prec);
/// Natural logarithm; the ball must be strictly positive (throws std::domain_error).
BallReal log(const BallReal& a, Precision prec);
BallReal sin(const BallReal& a, Precision prec);
BallReal cos(const BallReal& a, Precision prec);
BallReal max(const BallReal& a, const BallReal& b, Precision prec);
/// Ball containing both inputs.
BallReal hull(const BallReal& a, const BallReal& b, Precision prec);
/// Intersection; the inputs must overlap (throws std::invalid_argument).
BallReal intersect(const BallReal& a, const BallReal& b, Precision prec);
/// Widen the radius by `extra` (rounded up).
BallReal inflate(const BallReal& a, const Float& extra);

BallReal const_pi(Precision prec);
BallReal const_e(Precision prec);

struct BallComplex {
  BallReal re;
  BallReal im;

  BallComplex() = default;
  BallComplex(BallReal real, BallReal imag) : re(std::move(real)), im(std::move(imag)) {}
  explicit BallComplex(BallReal real) : re(std::move(real)) {}

  static BallComplex exact(long value) { return BallComplex(BallReal::exact(value)); }
  static BallComplex from_rational(const mpq_class& re, const mpq_class& im, Precision prec) {
    return {BallReal::from_rational(re, prec), BallReal::from_rational(im, prec)};
  }

  bool is_exact() const { return re.is_exact() && im.is_exact(); }
  bool is_real() const { return im.is_exact() && im.mid().is_zero(); }
  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
  /// Largest of the two component radii.
  Float max_rad() const { return max_of(re.rad(), im.rad()); }
  std::string to_string(std::size_t digits = 20) const;
};

bool overlaps(const BallComplex& a, const BallComplex& b);
bool contains(const BallComplex& outer, const BallComplex& inner);

BallComplex neg(const BallComplex& a);
BallComplex conj(const BallComplex& a);
BallComplex add(const BallComplex& a, const BallComplex& b, Precision prec);
BallComplex sub(const BallComplex& a, const BallComplex& b, Precision prec);
BallComplex mul(const BallComplex& a, const BallComplex& b, Precision prec);
BallComplex mul(const BallComplex& a, const BallReal& b, Precision prec);
BallComplex mul(const BallComplex& a, const mpz_class& b, Precision prec);
/// Throws DivisorContainsZero when the box of b contains 0.
BallComplex div(const BallComplex& a, const BallComplex& b, Precision prec);
BallComplex div(const BallComplex& a, const BallReal& b, Precision prec);
BallComplex add(const BallComplex& a, const mpz_class& b, Precision prec);

enum class ArithOp { add, sub, mul, div };
BallComplex arith(ArithOp op, const BallComplex& a, const BallComplex& b, Precision prec);

BallComplex exp_ball(const BallComplex& z, Precision prec);
BallReal abs_ball(const BallComplex& z, Precision prec);
/// z^k for k >= 0 by repeated squaring; z^0 is exactly 1.
BallComplex pow_int(const BallComplex& z, long k, Precision prec);
BallComplex intersect(const BallComplex& a, const BallComplex& b, Precision prec);
/// Widen both component radii by `extra`.
BallComplex inflate(const BallComplex& a, const Float& extra);

mpz_class factorial_exact(unsigned long n);

}  // namespace transkit
