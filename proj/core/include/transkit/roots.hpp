#pragma once

#include <vector>

#include "transkit/ball.hpp"
#include "transkit/poly.hpp"

namespace transkit {

/// Certified isolation of every complex root of a squarefree integer polynomial.
///
/// Returns deg(P) pairwise-disjoint boxes, each containing exactly one root, with
/// radii <= 2^(-prec.bits()/2), in canonical root order: ascending real part,
/// ties broken by ascending imaginary part. Roots certified to be real carry an
/// exact zero imaginary part. Non-real roots carry equal real and imaginary radii.
///
/// Approximations come from Aberth iteration; each box is certified by the
/// Weierstrass inclusion discs D(z_i, d |W_i|), which isolate the roots whenever
/// they are pairwise disjoint. Equal real parts of non-conjugate roots are
/// certified with a root-separation bound. Throws IsolationFailure when
/// certification is not reached under prec.cap().
std::vector<BallComplex> roots_of(const IntPolynomial& p, Precision prec);

/// Exact irreducibility over Q of a polynomial of degree >= 1.
///
/// A factor of degree m <= d/2 with leading coefficient c | a_d is c times the
/// product of m roots of P; every such candidate is either ruled out by a ball
/// coefficient that excludes all integers or tested by exact division.
bool is_irreducible(const IntPolynomial& p);

}  // namespace transkit
