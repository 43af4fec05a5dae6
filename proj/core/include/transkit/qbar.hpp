#pragma once

// Canonical enumeration alpha_1, alpha_2, ... of the algebraic numbers.
//
// Every algebraic number is listed exactly once, through its minimal polynomial
// (primitive, irreducible over Q, positive leading coefficient) and a root index.
// Minimal polynomials are ordered by the key
//
//     (deg + H, deg, (a_d, ..., a_0) lexicographically)
//
// with H the height, and the roots of one polynomial by ascending real part,
// then ascending imaginary part. So the listing starts 1, 0, -1, 2, -2, 1/2, ...

#include <compare>
#include <cstddef>
#include <deque>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "transkit/ball.hpp"
#include "transkit/poly.hpp"

namespace transkit {

/// Working precision of stored isolating boxes (radii at most 2^-64).
inline constexpr long kIsolationBits = 128;
inline constexpr std::size_t kDefaultMaxIndex = 1'000'000;

struct AlgebraicNumber {
  IntPolynomial minpoly;
  std::size_t root_index = 0;
  BallComplex isol;

  long degree() const { return minpoly.degree(); }
  bool is_rational() const { return degree() == 1; }
  /// Exact value; requires degree 1.
  mpq_class rational_value() const;
  bool is_real() const { return isol.is_real(); }
};

/// Validates and normalizes: the polynomial is made primitive with positive leading
/// coefficient and must be irreducible; root_index is in canonical root order.
/// Throws std::invalid_argument.
AlgebraicNumber make_algebraic(const IntPolynomial& p, std::size_t root_index);
AlgebraicNumber make_rational(const mpq_class& q);

/// Enclosure of the number with radius <= target_radius, inside its isolating box.
BallComplex approx(const AlgebraicNumber& a, const Float& target_radius,
                   long cap = kDefaultBitsCap);
/// Enclosure with radius <= 2^-bits.
BallComplex approx_bits(const AlgebraicNumber& a, long bits, long cap = kDefaultBitsCap);

struct EnumKey {
  long s = 0;  // deg + H
  long d = 0;
  std::vector<mpz_class> lex;  // (a_d, ..., a_0)

  friend std::strong_ordering operator<=>(const EnumKey& a, const EnumKey& b);
  friend bool operator==(const EnumKey& a, const EnumKey& b) { return (a <=> b) == 0; }
};

EnumKey enum_key(const IntPolynomial& minpoly);

/// Lazily generated enumeration with per-precision approximation caches.
///
/// Not thread-safe: share one instance under external synchronization, or give
/// each thread its own copy.
class QbarEnumeration {
 public:
  static constexpr std::string_view kId =
      "qbar/v1:key=(deg+H,deg,lex(a_d..a_0));roots=(re asc,im asc)";

  explicit QbarEnumeration(std::size_t max_index = kDefaultMaxIndex);

  /// alpha_k, 1-based. Throws CapExceeded past max_index, std::invalid_argument for k = 0.
  /// The reference stays valid while the enumeration grows (not across load_cache).
  const AlgebraicNumber& at(std::size_t k);
  /// alpha_k enclosed with radius <= 2^-bits; memoized.
  const BallComplex& approx(std::size_t k, long bits);

  std::size_t generated() const { return entries_.size(); }
  std::size_t max_index() const { return max_index_; }

  /// Writes records 1..count as JSON lines.
  void write_cache(std::ostream& out, std::size_t count);
  /// Loads records; they must be consecutive from k = 1 and match the key order.
  /// Replaces any generated prefix. Returns the number of records read.
  std::size_t load_cache(std::istream& in);

 private:
  bool generate_next_polynomial();

  std::size_t max_index_;
  std::deque<AlgebraicNumber> entries_;
  std::map<std::pair<std::size_t, long>, BallComplex> approx_cache_;
  // Generator cursor: current (s, d) block and the coefficient odometer (a_d..a_0).
  long s_ = 2;
  long d_ = 1;
  std::vector<long> odometer_;
};

/// alpha_k from a fresh default enumeration.
AlgebraicNumber enumerate(std::size_t k);

/// One cache line: {"k", "coeffs", "root_index", "approx_re", "approx_im", "rad"}.
std::string cache_record(std::size_t k, const AlgebraicNumber& a);
/// Inverse of cache_record. Throws ParseError.
std::pair<std::size_t, AlgebraicNumber> parse_cache_record(std::string_view line);

}  // namespace transkit
