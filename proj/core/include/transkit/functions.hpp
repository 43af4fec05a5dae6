#pragma once

// The Liouville constant l = sum_{n>=1} 10^(-n!) and the entire functions
//
//     f(z) = e^z + e^(1+z),   g(z) = e^(1+pi z),   h(z) = l + e^z,   e^(e^z),
//
// each with a certified enclosure.

#include <gmpxx.h>

#include "transkit/ball.hpp"

namespace transkit {

/// The partial sum p/q = sum_{j=1..m} 10^(-j!), with q = 10^(m!).
struct LiouvilleApprox {
  long m = 0;
  mpz_class p;
  mpz_class q;
};

/// Requires m >= 1.
LiouvilleApprox liouville_partial(long m);

/// Strict upper bound 2 * 10^(-(m+1)!) on l - p/q, rounded up to 64 bits.
///
/// The tail sum_{j>m} 10^(-j!) is dominated by the geometric series
/// 10^(-(m+1)!) (1 + 1/10 + 1/100 + ...) < 2 * 10^(-(m+1)!).
Float liouville_tail_bound(long m);

/// Ball containing l with rad <= target_radius. Throws PrecisionCapExceeded.
BallReal liouville_constant(const Float& target_radius, long cap = kDefaultBitsCap);

/// Certified witness that l is a Liouville number at exponent n.
struct LiouvilleWitness {
  long n = 0;
  LiouvilleApprox approx;
  mpq_class gap_lower;  // 10^(-(m+1)!) < l - p/q
  mpq_class gap_upper;  // l - p/q < 2 * 10^(-(m+1)!)
  mpq_class bound;      // q^(-n)
  /// 0 < gap_lower and gap_upper < bound, decided exactly.
  bool holds = false;
};

/// Uses m = max(n, 2). Requires n >= 1.
LiouvilleWitness liouville_witness(long n);

BallComplex eval_f(const BallComplex& z, Precision prec);
BallComplex eval_g(const BallComplex& z, Precision prec);
BallComplex eval_h(const BallComplex& z, Precision prec);
BallComplex eval_double_exp(const BallComplex& z, Precision prec);

/// |e^(-1) g(z) e^(-pi z) - 1|, which is zero for every z: (-1)^(iz) on the
/// principal branch is (e^(i pi))^(iz) = e^(-pi z).
BallReal baker_identity_residual(const BallComplex& z, Precision prec);

}  // namespace transkit
