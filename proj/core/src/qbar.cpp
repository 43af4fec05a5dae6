#include "transkit/qbar.hpp"

#include <nlohmann/json.hpp>

#include <deque>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "transkit/errors.hpp"
#include "transkit/roots.hpp"

namespace transkit {

namespace {

// Rounds a certified box to kIsolationBits midpoints, widening the radius to keep
// the root inside. Real boxes keep their exact zero imaginary part.
BallReal normalize_component(const BallReal& x) {
  Float mid(kIsolationBits);
  const int ternary = mpfr_set(mid.get(), x.mid().get(), MPFR_RNDN);
  Float rad = x.rad();
  if (ternary != 0) {
    Float diff(kRadiusBits);
    mpfr_sub(diff.get(), mid.get(), x.mid().get(), MPFR_RNDU);
    mpfr_abs(diff.get(), diff.get(), MPFR_RNDU);
    rad = add_up(rad, diff);
  }
  return BallReal(std::move(mid), std::move(rad));
}

BallComplex normalize_box(const BallComplex& z) {
  BallReal re = normalize_component(z.re);
  if (z.is_real()) return BallComplex(std::move(re));
  BallReal im = normalize_component(z.im);
  // One common radius for both components of a non-real root.
  const Float r = max_of(re.rad(), im.rad());
  return {BallReal(re.mid(), r), BallReal(im.mid(), r)};
}

std::vector<BallComplex> isolate(const IntPolynomial& p) {
  if (p.degree() == 1) {
    return {BallComplex(BallReal::from_rational(mpq_class(-p.coeff(0), p.coeff(1)),
                                                Precision(kIsolationBits)))};
  }
  auto roots = roots_of(p, Precision(kIsolationBits));
  for (auto& r : roots) r = normalize_box(r);
  return roots;
}

}  // namespace

mpq_class AlgebraicNumber::rational_value() const {
  if (!is_rational()) throw std::logic_error("rational_value: degree " + std::to_string(degree()));
  mpq_class q(-minpoly.coeff(0), minpoly.coeff(1));
  q.canonicalize();
  return q;
}

AlgebraicNumber make_algebraic(const IntPolynomial& p, std::size_t root_index) {
  if (p.degree() < 1) throw std::invalid_argument("minimal polynomial must have degree >= 1");
  IntPolynomial m = primitive_part(p);
  if (!is_irreducible(m)) throw std::invalid_argument("not irreducible: " + to_text(m));
  if (root_index >= static_cast<std::size_t>(m.degree())) {
    throw std::invalid_argument("root index " + std::to_string(root_index) + " out of range for " +
                                to_text(m));
  }
  auto roots = isolate(m);
  return {std::move(m), root_index, std::move(roots[root_index])};
}

AlgebraicNumber make_rational(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  IntPolynomial p(std::vector<mpz_class>{-c.get_num(), c.get_den()});
  auto roots = isolate(p);
  return {std::move(p), 0, std::move(roots[0])};
}

BallComplex approx_bits(const AlgebraicNumber& a, long bits, long cap) {
  if (a.is_rational()) {
    const mpq_class q = a.rational_value();
    const long mag = static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2));
    const long work = std::max(bits, 0L) + mag + 4;
    if (work > cap) throw PrecisionCapExceeded(work, cap);
    return BallComplex(BallReal::from_rational(q, Precision(std::max(work, kMinBits), cap)));
  }
  if (a.isol.max_rad() <= Float::pow2(-bits)) {
    return a.isol;
  }
  const long work = 2 * std::max(bits, 64L) + 32;
  if (work > cap) throw PrecisionCapExceeded(work, cap);
  const auto roots = roots_of(a.minpoly, Precision(work, cap));
  const BallComplex& r = roots.at(a.root_index);
  if (!overlaps(r, a.isol)) throw std::logic_error("refined root left its isolating box");
  if (r.is_real()) return BallComplex(intersect(r.re, a.isol.re, Precision(work, cap)));
  return intersect(r, a.isol, Precision(work, cap));
}

BallComplex approx(const AlgebraicNumber& a, const Float& target_radius, long cap) {
  if (target_radius.sign() <= 0) throw std::invalid_argument("target radius must be positive");
  long e = mpfr_get_exp(target_radius.get());  // target >= 2^(e-1)
  const long bits = std::max(1L - e + 1, 1L);
  return approx_bits(a, bits, cap);
}

std::strong_ordering operator<=>(const EnumKey& a, const EnumKey& b) {
  if (auto c = a.s <=> b.s; c != 0) return c;
  if (auto c = a.d <=> b.d; c != 0) return c;
  for (std::size_t i = 0; i < a.lex.size() && i < b.lex.size(); ++i) {
    const int c = cmp(a.lex[i], b.lex[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.lex.size() <=> b.lex.size();
}

EnumKey enum_key(const IntPolynomial& minpoly) {
  EnumKey key;
  key.d = minpoly.degree();
  key.s = key.d + height(minpoly).get_si();
  const auto c = minpoly.coeffs();
  key.lex.assign(c.rbegin(), c.rend());
  return key;
}

QbarEnumeration::QbarEnumeration(std::size_t max_index) : max_index_(max_index) {}

// Advances the odometer over (a_d, ..., a_0) in lexicographic order within the
// current (s, d) block, moving to the next block when it runs out. Pushes the
// roots of the next admissible polynomial. Returns false only on internal error.
bool QbarEnumeration::generate_next_polynomial() {
  for (;;) {
    const long h = s_ - d_;
    const std::size_t len = static_cast<std::size_t>(d_) + 1;
    if (odometer_.empty()) {
      odometer_.assign(len, -h);
      odometer_[0] = 1;
    } else {
      std::size_t i = len;
      while (i > 0) {
        --i;
        const long lo = i == 0 ? 1 : -h;
        if (odometer_[i] < h) {
          ++odometer_[i];
          break;
        }
        odometer_[i] = lo;
        if (i == 0) {
          odometer_.clear();
          if (++d_ >= s_) {
            ++s_;
            d_ = 1;
          }
          break;
        }
      }
      if (odometer_.empty()) continue;
    }

    // Admissibility: exact height h, a_0 != 0 for d >= 2, primitive, irreducible.
    bool has_h = false;
    for (long c : odometer_) has_h = has_h || c == h || c == -h;
    if (!has_h) continue;
    if (d_ >= 2 && odometer_.back() == 0) continue;
    std::vector<mpz_class> coeffs(odometer_.rbegin(), odometer_.rend());
    IntPolynomial p(std::move(coeffs));
    if (content(p) != 1) continue;
    if (!is_irreducible(p)) continue;

    auto roots = isolate(p);
    for (std::size_t i = 0; i < roots.size(); ++i) {
      entries_.push_back({p, i, std::move(roots[i])});
    }
    return true;
  }
}

const AlgebraicNumber& QbarEnumeration::at(std::size_t k) {
  if (k == 0) throw std::invalid_argument("enumeration index is 1-based");
  if (k > max_index_) {
    throw CapExceeded("enumeration index " + std::to_string(k) + " exceeds cap " +
                      std::to_string(max_index_));
  }
  while (entries_.size() < k) {
    if (!generate_next_polynomial()) throw std::logic_error("enumeration generator stalled");
  }
  return entries_[k - 1];
}

const BallComplex& QbarEnumeration::approx(std::size_t k, long bits) {
  const AlgebraicNumber& a = at(k);
  const auto key = std::make_pair(k, bits);
  auto it = approx_cache_.find(key);
  if (it == approx_cache_.end()) it = approx_cache_.emplace(key, approx_bits(a, bits)).first;
  return it->second;
}

void QbarEnumeration::write_cache(std::ostream& out, std::size_t count) {
  for (std::size_t k = 1; k <= count; ++k) out << cache_record(k, at(k)) << '\n';
}

std::size_t QbarEnumeration::load_cache(std::istream& in) {
  std::deque<AlgebraicNumber> loaded;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto [k, a] = parse_cache_record(line);
    if (k != loaded.size() + 1) {
      throw ParseError("cache record " + std::to_string(k) + " out of sequence");
    }
    if (!loaded.empty()) {
      const AlgebraicNumber& prev = loaded.back();
      const bool same_poly = prev.minpoly == a.minpoly;
      const bool ordered = same_poly ? a.root_index == prev.root_index + 1
                                     : (a.root_index == 0 && enum_key(prev.minpoly) < enum_key(a.minpoly));
      if (!ordered) throw ParseError("cache record " + std::to_string(k) + " breaks key order");
    } else if (a.root_index != 0) {
      throw ParseError("cache must start at a first root");
    }
    if (k > max_index_) break;
    loaded.push_back(std::move(a));
  }
  // The generator cursor resumes after the last complete polynomial.
  while (!loaded.empty() &&
         loaded.back().root_index + 1 != static_cast<std::size_t>(loaded.back().degree())) {
    const IntPolynomial last = loaded.back().minpoly;
    while (!loaded.empty() && loaded.back().minpoly == last) loaded.pop_back();
  }
  const std::size_t n = loaded.size();
  entries_ = std::move(loaded);
  approx_cache_.clear();
  if (entries_.empty()) {
    s_ = 2;
    d_ = 1;
    odometer_.clear();
  } else {
    const IntPolynomial& p = entries_.back().minpoly;
    d_ = p.degree();
    s_ = d_ + height(p).get_si();
    odometer_.clear();
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) odometer_.push_back(it->get_si());
  }
  return n;
}

AlgebraicNumber enumerate(std::size_t k) {
  QbarEnumeration e;
  return e.at(k);
}

std::string cache_record(std::size_t k, const AlgebraicNumber& a) {
  nlohmann::json j;
  j["k"] = k;
  auto coeffs = nlohmann::json::array();
  for (const auto& c : a.minpoly.coeffs()) coeffs.push_back(nlohmann::json::parse(c.get_str()));
  j["coeffs"] = coeffs;
  j["root_index"] = a.root_index;
  j["approx_re"] = a.isol.re.mid().to_roundtrip_decimal();
  j["approx_im"] = a.isol.im.mid().to_roundtrip_decimal();
  j["rad"] = a.isol.max_rad().to_roundtrip_decimal();
  return j.dump();
}

std::pair<std::size_t, AlgebraicNumber> parse_cache_record(std::string_view line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("cache record: ") + e.what());
  }
  try {
    const auto k = j.at("k").get<std::size_t>();
    std::vector<mpz_class> coeffs;
    for (const auto& c : j.at("coeffs")) {
      if (!c.is_number_integer()) throw ParseError("cache coefficient is not an integer");
      coeffs.emplace_back(c.dump(), 10);
    }
    IntPolynomial p(std::move(coeffs));
    if (p.degree() < 1 || p.leading() <= 0 || content(p) != 1) {
      throw ParseError("cache polynomial is not a normalized minimal polynomial");
    }
    const auto idx = j.at("root_index").get<std::size_t>();
    if (idx >= static_cast<std::size_t>(p.degree())) throw ParseError("cache root index out of range");
    const auto re = j.at("approx_re").get<std::string>();
    const auto im = j.at("approx_im").get<std::string>();
    const Float rad = Float::from_string(j.at("rad").get<std::string>(), kRadiusBits, MPFR_RNDN);
    Float mre = Float::from_string(re, kIsolationBits, MPFR_RNDN);
    BallComplex isol;
    if (im == "0") {
      isol = BallComplex(BallReal(std::move(mre), rad));
    } else {
      isol = BallComplex(BallReal(std::move(mre), rad),
                         BallReal(Float::from_string(im, kIsolationBits, MPFR_RNDN), rad));
    }
    return {k, AlgebraicNumber{std::move(p), idx, std::move(isol)}};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("cache record: ") + e.what());
  }
}

}  // namespace transkit
