#pragma once

#include <mpfr.h>
#include <gmpxx.h>

#include <string>
#include <string_view>

namespace transkit {

/// Precision used for every error radius. Radii are always rounded upward.
inline constexpr mpfr_prec_t kRadiusBits = 64;

/// Owning RAII handle around an `mpfr_t`. Copies preserve the source precision.
class Float {
 public:
  explicit Float(mpfr_prec_t bits = kRadiusBits) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
  }
  Float(const Float& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  Float(Float&& other) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
  }
  Float& operator=(const Float& other) {
    if (this != &other) {
      mpfr_set_prec(v_, mpfr_get_prec(other.v_));
      mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
  }
  Float& operator=(Float&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
  }
  ~Float() { mpfr_clear(v_); }

  mpfr_ptr get() noexcept { return v_; }
  mpfr_srcptr get() const noexcept { return v_; }

  mpfr_prec_t bits() const noexcept { return mpfr_get_prec(v_); }
  int sign() const noexcept { return mpfr_sgn(v_); }
  bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(v_) != 0; }

  static Float from_si(long value, mpfr_prec_t bits, mpfr_rnd_t rnd = MPFR_RNDN);
  static Float from_z(const mpz_class& value, mpfr_prec_t bits, mpfr_rnd_t rnd);
  static Float from_q(const mpq_class& value, mpfr_prec_t bits, mpfr_rnd_t rnd);
  /// Parses a decimal literal such as "1e-30". Throws ParseError.
  static Float from_string(std::string_view text, mpfr_prec_t bits, mpfr_rnd_t rnd);
  /// 2^exponent, exact.
  static Float pow2(long exponent, mpfr_prec_t bits = kRadiusBits);

  /// Exact conversion; the value must be finite.
  mpq_class to_rational() const;

  /// Scientific decimal string with `digits` significant digits, trailing zeros trimmed.
  std::string to_decimal(std::size_t digits, mpfr_rnd_t rnd = MPFR_RNDN) const;
  /// Shortest digit count that reproduces this value when read back at the same precision.
  std::string to_roundtrip_decimal() const;

  friend int compare(const Float& a, const Float& b) { return mpfr_cmp(a.v_, b.v_); }
  friend bool operator<(const Float& a, const Float& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Float& a, const Float& b) {
    return mpfr_lessequal_p(a.v_, b.v_) != 0;
  }
  friend bool operator>(const Float& a, const Float& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Float& a, const Float& b) {
    return mpfr_greaterequal_p(a.v_, b.v_) != 0;
  }
  friend bool operator==(const Float& a, const Float& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  /// Bitwise identity: same precision and same value.
  friend bool identical(const Float& a, const Float& b) {
    return a.bits() == b.bits() && (mpfr_equal_p(a.v_, b.v_) != 0 ||
                                    (a.is_zero() && b.is_zero()));
  }

 private:
  mpfr_t v_;
};

// Directed-rounding helpers used by radius bookkeeping; results carry `kRadiusBits`.
Float add_up(const Float& a, const Float& b);
Float sub_down(const Float& a, const Float& b);
Float mul_up(const Float& a, const Float& b);
Float abs_up(const Float& a);
Float max_of(const Float& a, const Float& b);
Float min_of(const Float& a, const Float& b);

}  // namespace transkit
