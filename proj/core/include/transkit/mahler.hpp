#pragma once

// Finite-scale Mahler quantities of a complex number xi:
//
//     Omega_n(xi, H) = min { |P(xi)| : P in Z[z], deg P <= n, H(P) <= H, P(xi) != 0 }
//     omega_n(xi, H) = -ln Omega_n(xi, H) / (n ln H)      (H >= 2)
//
// The search runs over one representative of each pair {P, -P}: the zero
// polynomial and every P whose first nonzero coefficient in (a_n, ..., a_0)
// is positive. Its balanced base-(2H+1) value V = sum a_k (2H+1)^k then runs
// over 0 .. ((2H+1)^(n+1) - 1) / 2, and V order is lexicographic order on
// (a_n, ..., a_0). Ties for the minimum go to the smallest V.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "transkit/ball.hpp"
#include "transkit/poly.hpp"
#include "transkit/qbar.hpp"

namespace transkit {

enum class NamedConstant { pi, e, liouville };

/// The point xi: an exact algebraic number, a fixed numeric ball, or a named
/// transcendental constant computed at whatever precision is asked for.
class Xi {
 public:
  explicit Xi(AlgebraicNumber a) : value_(std::move(a)) {}
  explicit Xi(BallComplex z) : value_(std::move(z)) {}
  explicit Xi(NamedConstant c) : value_(c) {}
  static Xi rational(const mpq_class& q) { return Xi(make_rational(q)); }

  bool is_algebraic() const { return std::holds_alternative<AlgebraicNumber>(value_); }
  const AlgebraicNumber* algebraic() const { return std::get_if<AlgebraicNumber>(&value_); }
  /// A numeric ball cannot be refined past its own radius.
  bool is_fixed_ball() const { return std::holds_alternative<BallComplex>(value_); }
  bool is_real() const;
  /// Enclosure with radius about 2^-bits (exactly the stored ball for fixed balls).
  BallComplex ball(long bits, long cap = kDefaultBitsCap) const;
  std::string describe() const;

 private:
  std::variant<AlgebraicNumber, BallComplex, NamedConstant> value_;
};

inline constexpr std::uint64_t kDefaultOmegaBudget = 1'000'000'000;

struct OmegaQuery {
  Xi xi;
  long n = 1;
  long H = 1;
  long start_bits = 64;
  long max_bits = 4096;
  std::uint64_t budget = kDefaultOmegaBudget;
  /// 0 picks the hardware concurrency.
  unsigned workers = 1;
  /// Scan V in descending order instead; the result is the same.
  bool reverse_scan = false;
};

struct OmegaResult {
  /// Enclosure of Omega_n(xi, H); excludes 0.
  BallReal omega_min;
  /// omega_n(xi, H) for H >= 2.
  std::optional<BallReal> exponent;
  IntPolynomial argmin;
  std::uint64_t zeros_excluded = 0;
  std::uint64_t candidates_scanned = 0;
  /// Contenders for the minimum stayed inseparable at max_bits; omega_min is
  /// then their hull and argmin the smallest of them.
  bool tie_unresolved = false;
  /// Candidates whose value could be neither certified zero nor nonzero.
  std::vector<IntPolynomial> undecidable;
  long bits = 0;
};

/// Number of representatives scanned: ((2H+1)^(n+1) - 1) / 2 + 1.
mpz_class omega_search_size(long n, long H);

/// Exhaustive certified minimization. Throws BudgetExceeded when the search
/// space exceeds the budget, std::invalid_argument for n < 1 or H < 1.
OmegaResult omega_search(const OmegaQuery& q);

/// omega = -ln Omega / (n ln H). Throws std::invalid_argument for H < 2.
BallReal omega_exponent(const BallReal& omega, long n, long H, Precision prec);

struct ZeroDecision {
  bool zero = false;
  /// Enclosure of |P(xi)| (exactly 0 when zero).
  BallReal magnitude;
  long bits = 0;
};

/// Exact for algebraic xi: zero iff the minimal polynomial divides P. Otherwise
/// refines up to max_bits and throws UndecidableZero if 0 is never excluded.
ZeroDecision zero_detect(const IntPolynomial& p, const Xi& xi, long start_bits = 64,
                         long max_bits = 4096);

struct TrajectoryPoint {
  long H = 0;
  OmegaResult result;
};

/// omega_search for each H in H_list (ascending, every H >= 2).
std::vector<TrajectoryPoint> omega_trajectory(const OmegaQuery& base, const std::vector<long>& H_list);

/// The polynomial with balanced base-(2H+1) value v and degree bound n.
IntPolynomial polynomial_from_index(std::uint64_t v, long n, long H);
/// Inverse of polynomial_from_index for P in P_{n,H} (any sign).
std::int64_t index_of_polynomial(const IntPolynomial& p, long n, long H);

}  // namespace transkit
