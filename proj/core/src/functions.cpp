#include "transkit/functions.hpp"

#include <stdexcept>

#include "transkit/errors.hpp"

namespace transkit {

namespace {

mpz_class factorial(long m) { return factorial_exact(static_cast<unsigned long>(m)); }

mpz_class pow10(const mpz_class& e) {
  if (!e.fits_ulong_p()) throw CapExceeded("power of ten too large");
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e.get_ui());
  return r;
}

}  // namespace

LiouvilleApprox liouville_partial(long m) {
  if (m < 1) throw std::invalid_argument("liouville_partial requires m >= 1");
  LiouvilleApprox a;
  a.m = m;
  const mpz_class top = factorial(m);
  a.q = pow10(top);
  for (long j = 1; j <= m; ++j) a.p += pow10(top - factorial(j));
  return a;
}

Float liouville_tail_bound(long m) {
  const mpz_class e = factorial(m + 1);
  if (!e.fits_ulong_p()) throw CapExceeded("Liouville truncation too deep");
  Float t(kRadiusBits);
  mpfr_ui_pow_ui(t.get(), 10, e.get_ui(), MPFR_RNDD);
  mpfr_ui_div(t.get(), 2, t.get(), MPFR_RNDU);
  return t;
}

BallReal liouville_constant(const Float& target_radius, long cap) {
  if (target_radius.sign() <= 0) throw std::invalid_argument("target radius must be positive");
  Float half(kRadiusBits);
  mpfr_div_2ui(half.get(), target_radius.get(), 1, MPFR_RNDD);
  long m = 1;
  while (liouville_tail_bound(m) > half) ++m;
  const LiouvilleApprox a = liouville_partial(m);
  const long bits = std::max(Precision::bits_for_radius(half, 2), kMinBits);
  if (bits > cap) throw PrecisionCapExceeded(bits, cap);
  const BallReal partial = BallReal::from_rational(mpq_class(a.p, a.q), Precision(bits, cap));
  return inflate(partial, liouville_tail_bound(m));
}

LiouvilleWitness liouville_witness(long n) {
  if (n < 1) throw std::invalid_argument("liouville_witness requires n >= 1");
  LiouvilleWitness w;
  w.n = n;
  w.approx = liouville_partial(std::max(n, 2L));
  const mpz_class next = pow10(factorial(w.approx.m + 1));
  w.gap_lower = mpq_class(1, next);
  w.gap_upper = mpq_class(2, next);
  w.gap_upper.canonicalize();
  mpz_class qn;
  mpz_pow_ui(qn.get_mpz_t(), w.approx.q.get_mpz_t(), static_cast<unsigned long>(n));
  w.bound = mpq_class(1, qn);
  w.holds = w.gap_lower > 0 && w.gap_upper < w.bound;
  return w;
}

BallComplex eval_f(const BallComplex& z, Precision prec) {
  const Precision work = prec.with_bits(prec.bits() + 8);
  const BallComplex a = exp_ball(z, work);
  const BallComplex b = exp_ball(add(z, mpz_class(1), work), work);
  return add(a, b, prec);
}

BallComplex eval_g(const BallComplex& z, Precision prec) {
  const Precision work = prec.with_bits(prec.bits() + 8);
  const BallComplex pz = mul(z, const_pi(work), work);
  return exp_ball(add(pz, mpz_class(1), work), prec);
}

BallComplex eval_h(const BallComplex& z, Precision prec) {
  const Precision work = prec.with_bits(prec.bits() + 8);
  const BallReal l = liouville_constant(Float::pow2(-work.bits()), prec.cap());
  return add(exp_ball(z, work), BallComplex(l), prec);
}

BallComplex eval_double_exp(const BallComplex& z, Precision prec) {
  const Precision work = prec.with_bits(prec.bits() + 16);
  return exp_ball(exp_ball(z, work), prec);
}

BallReal baker_identity_residual(const BallComplex& z, Precision prec) {
  const Precision work = prec.with_bits(prec.bits() + 8);
  const BallComplex pz = mul(z, const_pi(work), work);
  const BallComplex g = eval_g(z, work);
  const BallComplex inv_e = exp_ball(BallComplex::exact(-1), work);
  const BallComplex shift = exp_ball(neg(pz), work);
  const BallComplex product = mul(mul(inv_e, g, work), shift, work);
  return abs_ball(add(product, mpz_class(-1), work), prec);
}

}  // namespace transkit
