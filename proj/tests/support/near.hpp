#pragma once

#include <gmpxx.h>

#include <string_view>

#include "transkit/ball.hpp"
#include "transkit/poly.hpp"

namespace oracle {

/// |mid - value| <= rad + tol, decided exactly.
inline bool near(const transkit::BallReal& b, std::string_view value, const mpq_class& tol) {
  const mpq_class d = b.mid().to_rational() - transkit::parse_rational(value);
  return abs(d) <= b.rad().to_rational() + tol;
}

inline bool near(const transkit::BallComplex& b, std::string_view re, std::string_view im,
                 const mpq_class& tol) {
  return near(b.re, re, tol) && near(b.im, im, tol);
}

inline mpq_class ten_to(long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? mpq_class(1, p) : mpq_class(p);
}

}  // namespace oracle
