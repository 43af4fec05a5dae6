#include "transkit/float.hpp"

#include <cstdlib>
#include <memory>
#include <string>

#include "transkit/errors.hpp"

namespace transkit {

Float Float::from_si(long value, mpfr_prec_t bits, mpfr_rnd_t rnd) {
  Float f(bits);
  mpfr_set_si(f.get(), value, rnd);
  return f;
}

Float Float::from_z(const mpz_class& value, mpfr_prec_t bits, mpfr_rnd_t rnd) {
  Float f(bits);
  mpfr_set_z(f.get(), value.get_mpz_t(), rnd);
  return f;
}

Float Float::from_q(const mpq_class& value, mpfr_prec_t bits, mpfr_rnd_t rnd) {
  Float f(bits);
  mpfr_set_q(f.get(), value.get_mpq_t(), rnd);
  return f;
}

Float Float::from_string(std::string_view text, mpfr_prec_t bits, mpfr_rnd_t rnd) {
  Float f(bits);
  std::string owned(text);
  if (owned.empty() || mpfr_set_str(f.get(), owned.c_str(), 10, rnd) != 0 || !f.is_finite()) {
    throw ParseError("not a decimal number: '" + owned + "'");
  }
  return f;
}

Float Float::pow2(long exponent, mpfr_prec_t bits) {
  Float f(bits);
  mpfr_set_ui_2exp(f.get(), 1, exponent, MPFR_RNDN);
  return f;
}

mpq_class Float::to_rational() const {
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), v_);
  return q;
}

std::string Float::to_decimal(std::size_t digits, mpfr_rnd_t rnd) const {
  if (is_zero()) return "0";
  mpfr_exp_t exp10 = 0;
  std::unique_ptr<char, void (*)(char*)> raw(mpfr_get_str(nullptr, &exp10, 10, digits, v_, rnd),
                                             mpfr_free_str);
  std::string mant(raw.get());
  std::string sign;
  if (mant.front() == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  while (mant.size() > 1 && mant.back() == '0') mant.pop_back();
  // value = 0.mant * 10^exp10 = m.antissa * 10^(exp10 - 1)
  std::string out = sign + mant.substr(0, 1);
  if (mant.size() > 1) out += "." + mant.substr(1);
  const long e = static_cast<long>(exp10) - 1;
  if (e != 0) out += "e" + std::to_string(e);
  return out;
}

std::string Float::to_roundtrip_decimal() const {
  return to_decimal(mpfr_get_str_ndigits(10, bits()), MPFR_RNDN);
}

Float add_up(const Float& a, const Float& b) {
  Float r(kRadiusBits);
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

Float sub_down(const Float& a, const Float& b) {
  Float r(kRadiusBits);
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDD);
  return r;
}

Float mul_up(const Float& a, const Float& b) {
  Float r(kRadiusBits);
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

Float abs_up(const Float& a) {
  Float r(kRadiusBits);
  mpfr_abs(r.get(), a.get(), MPFR_RNDU);
  return r;
}

Float max_of(const Float& a, const Float& b) { return a < b ? b : a; }
Float min_of(const Float& a, const Float& b) { return b < a ? b : a; }

}  // namespace transkit
