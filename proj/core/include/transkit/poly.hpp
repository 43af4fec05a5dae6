#pragma once

// Exact integer and rational polynomials in one variable z.
//
// Coefficients are stored constant-term first. The normal form has no trailing
// zero coefficients, so the zero polynomial is the empty sequence and
// degree() is -1 for it.

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "transkit/ball.hpp"

namespace transkit {

template <class Coeff>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
  Polynomial(std::initializer_list<long> coeffs) {
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
  }

  /// The monomial c z^k.
  static Polynomial monomial(Coeff c, std::size_t k) {
    std::vector<Coeff> v(k + 1, Coeff(0));
    v[k] = std::move(c);
    return Polynomial(std::move(v));
  }

  std::span<const Coeff> coeffs() const noexcept { return coeffs_; }
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Coefficient of z^k; zero past the degree.
  Coeff coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Coeff(0); }
  const Coeff& leading() const { return coeffs_.back(); }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Coeff> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Coeff(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return Polynomial(std::move(v));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> v(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(v));
  }
  friend Polynomial operator*(const Coeff& c, const Polynomial& p) {
    std::vector<Coeff> v(p.coeffs_);
    for (auto& x : v) x *= c;
    return Polynomial(std::move(v));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Exact Horner evaluation.
  template <class Point>
  Point evaluate(const Point& z) const {
    Point acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + Point(*it);
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Coeff> v(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * static_cast<long>(k);
    return Polynomial(std::move(v));
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using IntPolynomial = Polynomial<mpz_class>;
using RatPolynomial = Polynomial<mpq_class>;

RatPolynomial to_rational(const IntPolynomial& p);

/// Exact complex rational x + iy.
struct GaussianRational {
  mpq_class re;
  mpq_class im;

  GaussianRational() = default;
  GaussianRational(long v) : re(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(const mpz_class& v) : re(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(const mpq_class& v) : re(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

  mpq_class norm() const { return re * re + im * im; }
  bool is_zero() const { return re == 0 && im == 0; }
  BallComplex to_ball(Precision prec) const { return BallComplex::from_rational(re, im, prec); }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// The exact value of an exact ball (radius 0 in both components).
GaussianRational exact_value(const BallComplex& z);

/// max_k |a_k|. Throws ZeroPolynomial.
mpz_class height(const IntPolynomial& p);
/// sum_k |a_k|.
mpz_class length(const IntPolynomial& p);

/// Ball Horner evaluation.
BallComplex eval_ball(const IntPolynomial& p, const BallComplex& z, Precision prec);
BallComplex eval_ball(const RatPolynomial& p, const BallComplex& z, Precision prec);
BallReal eval_ball(const IntPolynomial& p, const BallReal& x, Precision prec);

/// e_0..e_n of xs (e_0 = 1), by the recurrence of multiplying out prod (1 + x_i t).
std::vector<mpq_class> elementary_symmetric(std::span<const mpq_class> xs);
std::vector<BallComplex> elementary_symmetric(std::span<const BallComplex> xs, Precision prec);

/// sigma_k(xs) for 1 <= k <= |xs|. Throws IndexOutOfRange.
mpq_class sigma(std::span<const mpq_class> xs, long k);
BallComplex sigma(std::span<const BallComplex> xs, long k, Precision prec);

/// prod (z - x_i), monic; the empty product is 1.
RatPolynomial expand_roots(std::span<const mpq_class> xs);

/// a_0 prod_{j=1..n}(z^j + 1) + sum_{k=1..n} a_k z^k prod_{j != k}(z^j + 1), expanded.
/// Requires n = a.size() - 1 >= 1.
RatPolynomial lemma6_construct(std::span<const mpq_class> a);

struct BoundCheck {
  bool holds = false;
  /// Enclosure of L(P) max(1,|z|)^deg - |P(z)|.
  BallReal margin;
  long bits = 0;
};

/// Decides |P(z)| <= L(P) max(1,|z|)^deg P over the whole box z.
///
/// Exact boxes are decided in exact rational arithmetic. Other boxes go up a
/// precision ladder starting at `start`; a persistent overlap at the cap raises
/// Undecidable. Throws ZeroPolynomial.
BoundCheck length_bound_holds(const IntPolynomial& p, const BallComplex& z, Precision start);

/// Exact check |P(z)|^2 <= L(P)^2 max(1,|z|^2)^deg at a Gaussian rational.
bool length_bound_holds_exact(const IntPolynomial& p, const GaussianRational& z);

/// Division with remainder over Q. Throws ZeroPolynomial for a zero divisor.
struct RatDivision {
  RatPolynomial quotient;
  RatPolynomial remainder;
};
RatDivision divide(const RatPolynomial& a, const RatPolynomial& b);
/// True iff d divides p over Q.
bool divides(const IntPolynomial& d, const IntPolynomial& p);
/// Monic gcd over Q (zero if both inputs are zero).
RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b);
/// Gcd of the coefficients (0 for the zero polynomial).
mpz_class content(const IntPolynomial& p);
/// Divide out the content and make the leading coefficient positive.
IntPolynomial primitive_part(const IntPolynomial& p);
/// Clear denominators of a rational polynomial and take the primitive part.
IntPolynomial primitive_part(const RatPolynomial& p);

/// "3z^2 - z + 2" style text. The zero polynomial prints as "0".
std::string to_text(const IntPolynomial& p);
std::string to_text(const RatPolynomial& p);
/// Parses the text form above (integer or p/q coefficients, optional '*'). Throws ParseError.
RatPolynomial parse_polynomial(std::string_view text);
/// Parses a constant-first coefficient list: a JSON array of strings or numbers,
/// or a bare comma-separated list. Throws ParseError.
RatPolynomial parse_coefficients(std::string_view text);
IntPolynomial to_integer(const RatPolynomial& p);
/// JSON array of decimal coefficient strings, constant term first.
std::string to_json_array(const IntPolynomial& p);
std::string to_json_array(const RatPolynomial& p);

/// Parses an integer "12" or rational "-3/4" or exact decimal "0.125" / "1e-3". Throws ParseError.
mpq_class parse_rational(std::string_view text);

}  // namespace transkit
