#pragma once

// The interpolation series over the enumeration alpha_1, alpha_2, ...
//
//     U(w, z) = sum_{n>=1} w^n (z - alpha_1) ... (z - alpha_n)
//                          / ( [1 + sum_{k=1..n} |sigma_k(alpha_1..alpha_n)|] (|w|^n + 1) n! )
//
// Each term is bounded by max(1,|z|)^n / n!, so the series converges everywhere
// and |U(w, z)| <= e^max(1,|z|). Note the |w|^n in the denominator: U is
// continuous in (w, z) but not holomorphic in w.

#include <cstddef>
#include <string>
#include <variant>

#include "transkit/ball.hpp"
#include "transkit/poly.hpp"
#include "transkit/qbar.hpp"

namespace transkit {

/// A point z: a ball, an exact Gaussian rational, or exactly alpha_j.
class UPoint {
 public:
  static UPoint ball(BallComplex z) { return UPoint(std::move(z)); }
  static UPoint exact(GaussianRational z) { return UPoint(std::move(z)); }
  static UPoint alpha(std::size_t j);

  bool is_alpha() const { return std::holds_alternative<std::size_t>(value_); }
  std::size_t alpha_index() const { return std::get<std::size_t>(value_); }
  const GaussianRational* exact_value() const { return std::get_if<GaussianRational>(&value_); }
  /// Enclosure of the point at about `bits` of precision.
  BallComplex at(QbarEnumeration& e, long bits) const;
  /// True when the point is exactly alpha_k.
  bool equals(QbarEnumeration& e, std::size_t k) const;
  /// True when the point is given as an exact 0 (ball or Gaussian rational).
  bool is_zero() const;

 private:
  using Value = std::variant<BallComplex, GaussianRational, std::size_t>;
  explicit UPoint(BallComplex z) : value_(std::move(z)) {}
  explicit UPoint(GaussianRational z) : value_(std::move(z)) {}
  explicit UPoint(std::size_t j) : value_(j) {}
  Value value_;
};

struct UEvaluation {
  BallComplex value;
  /// Terms 1..N were summed.
  long truncation_N = 0;
  /// Bound on the omitted terms, M^(N+1)/(N+1)! e^M with M = max(1, |z|); 0 when
  /// every omitted term is exactly zero.
  Float tail_bound;
  std::string enumeration_id;
  /// The sum is finite: w = 0, or z equals an enumerated number alpha_j.
  bool exact_path = false;
  long bits = 0;
};

/// The n-th term, n >= 1. Exactly zero when z is alpha_j with j <= n.
BallComplex u_term(QbarEnumeration& e, long n, const UPoint& w, const UPoint& z, Precision prec);
BallComplex u_term(QbarEnumeration& e, long n, const BallComplex& w, const UPoint& z, Precision prec);

/// Enclosure of U(w, z) with radius <= target_radius in each component. Exact
/// arguments are re-rounded at every precision step. Throws PrecisionCapExceeded.
UEvaluation u_eval(QbarEnumeration& e, const UPoint& w, const UPoint& z, const Float& target_radius,
                   long cap = kDefaultBitsCap);
UEvaluation u_eval(QbarEnumeration& e, const BallComplex& w, const UPoint& z, const Float& target_radius,
                   long cap = kDefaultBitsCap);

/// sum_{n=1..t} u_term(n, w, alpha_{t+1}): the whole series at z = alpha_{t+1}.
BallComplex u_finite_sum(QbarEnumeration& e, const UPoint& w, std::size_t t, Precision prec);
BallComplex u_finite_sum(QbarEnumeration& e, const BallComplex& w, std::size_t t, Precision prec);

struct UBoundCheck {
  bool holds = false;
  /// Enclosure of e^max(1,|z|) - |U(w, z)|.
  BallReal margin;
  long bits = 0;
};

/// Decides |U(w, z)| <= e^max(1,|z|), refining up to the cap. Throws Undecidable.
UBoundCheck u_bound_check(QbarEnumeration& e, const UPoint& w, const UPoint& z, Precision start);

}  // namespace transkit
