#include "transkit/poly.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "transkit/errors.hpp"

namespace transkit {

RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<mpq_class> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return RatPolynomial(std::move(v));
}

IntPolynomial to_integer(const RatPolynomial& p) {
  std::vector<mpz_class> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    if (c.get_den() != 1) throw ParseError("coefficient " + c.get_str() + " is not an integer");
    v.emplace_back(c.get_num());
  }
  return IntPolynomial(std::move(v));
}

GaussianRational exact_value(const BallComplex& z) {
  if (!z.is_exact()) throw std::invalid_argument("ball is not exact");
  return {z.re.mid().to_rational(), z.im.mid().to_rational()};
}

mpz_class height(const IntPolynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  mpz_class h = 0;
  for (const auto& c : p.coeffs()) h = std::max<mpz_class>(h, abs(c));
  return h;
}

mpz_class length(const IntPolynomial& p) {
  mpz_class l = 0;
  for (const auto& c : p.coeffs()) l += abs(c);
  return l;
}

BallComplex eval_ball(const IntPolynomial& p, const BallComplex& z, Precision prec) {
  BallComplex acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc = add(mul(acc, z, prec), *it, prec);
  }
  return acc;
}

BallComplex eval_ball(const RatPolynomial& p, const BallComplex& z, Precision prec) {
  BallComplex acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    const BallComplex c = BallComplex(BallReal::from_rational(*it, prec));
    acc = add(mul(acc, z, prec), c, prec);
  }
  return acc;
}

BallReal eval_ball(const IntPolynomial& p, const BallReal& x, Precision prec) {
  BallReal acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc = add(mul(acc, x, prec), *it, prec);
  }
  return acc;
}

std::vector<mpq_class> elementary_symmetric(std::span<const mpq_class> xs) {
  std::vector<mpq_class> e(xs.size() + 1, mpq_class(0));
  e[0] = 1;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t k = i + 1; k >= 1; --k) e[k] += e[k - 1] * xs[i];
  }
  return e;
}

std::vector<BallComplex> elementary_symmetric(std::span<const BallComplex> xs, Precision prec) {
  std::vector<BallComplex> e(xs.size() + 1);
  e[0] = BallComplex::exact(1);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t k = i + 1; k >= 1; --k) e[k] = add(e[k], mul(e[k - 1], xs[i], prec), prec);
  }
  return e;
}

namespace {
void check_sigma_index(std::size_t n, long k) {
  if (k < 1 || static_cast<std::size_t>(k) > n) {
    throw IndexOutOfRange("sigma index " + std::to_string(k) + " outside 1.." + std::to_string(n));
  }
}
}  // namespace

mpq_class sigma(std::span<const mpq_class> xs, long k) {
  check_sigma_index(xs.size(), k);
  return elementary_symmetric(xs)[static_cast<std::size_t>(k)];
}

BallComplex sigma(std::span<const BallComplex> xs, long k, Precision prec) {
  check_sigma_index(xs.size(), k);
  return elementary_symmetric(xs, prec)[static_cast<std::size_t>(k)];
}

RatPolynomial expand_roots(std::span<const mpq_class> xs) {
  RatPolynomial acc({mpq_class(1)});
  for (const auto& x : xs) acc = acc * RatPolynomial({mpq_class(-x), mpq_class(1)});
  // Coefficient of z^(n-k) must be (-1)^k sigma_k.
  const auto e = elementary_symmetric(xs);
  const std::size_t n = xs.size();
  for (std::size_t k = 0; k <= n; ++k) {
    const mpq_class expected = (k % 2 == 0) ? e[k] : mpq_class(-e[k]);
    if (acc.coeff(n - k) != expected) {
      throw std::logic_error("expand_roots: coefficient disagrees with sigma_" + std::to_string(k));
    }
  }
  return acc;
}

RatPolynomial lemma6_construct(std::span<const mpq_class> a) {
  if (a.size() < 2) throw std::invalid_argument("lemma6_construct requires n >= 1");
  const std::size_t n = a.size() - 1;
  std::vector<RatPolynomial> factors;  // factors[j-1] = z^j + 1
  factors.reserve(n);
  for (std::size_t j = 1; j <= n; ++j) {
    factors.push_back(RatPolynomial::monomial(mpq_class(1), j) + RatPolynomial({mpq_class(1)}));
  }
  // prefix[j] = prod_{i<j} factors[i], suffix[j] = prod_{i>=j} factors[i]
  std::vector<RatPolynomial> prefix(n + 1, RatPolynomial({mpq_class(1)}));
  std::vector<RatPolynomial> suffix(n + 1, RatPolynomial({mpq_class(1)}));
  for (std::size_t j = 0; j < n; ++j) prefix[j + 1] = prefix[j] * factors[j];
  for (std::size_t j = n; j-- > 0;) suffix[j] = factors[j] * suffix[j + 1];

  RatPolynomial result = a[0] * prefix[n];
  for (std::size_t k = 1; k <= n; ++k) {
    if (a[k] == 0) continue;
    result = result + RatPolynomial::monomial(a[k], k) * prefix[k - 1] * suffix[k];
  }
  return result;
}

bool length_bound_holds_exact(const IntPolynomial& p, const GaussianRational& z) {
  if (p.is_zero()) throw ZeroPolynomial();
  const GaussianRational value = p.evaluate(z);
  const mpq_class l(length(p));
  mpq_class rhs = l * l;
  const mpq_class r2 = std::max<mpq_class>(mpq_class(1), z.norm());
  for (long k = 0; k < p.degree(); ++k) rhs *= r2;
  return value.norm() <= rhs;
}

namespace {

struct BoundSides {
  BallReal lhs;
  BallReal rhs;
};

BoundSides bound_sides(const IntPolynomial& p, const BallComplex& z, Precision prec) {
  BallReal lhs = abs_ball(eval_ball(p, z, prec), prec);
  BallReal m = max(BallReal::exact(1), abs_ball(z, prec), prec);
  BallReal rhs = BallReal::exact(length(p));
  for (long k = 0; k < p.degree(); ++k) rhs = mul(rhs, m, prec);
  return {std::move(lhs), std::move(rhs)};
}

}  // namespace

BoundCheck length_bound_holds(const IntPolynomial& p, const BallComplex& z, Precision start) {
  if (p.is_zero()) throw ZeroPolynomial();
  if (z.is_exact()) {
    auto sides = bound_sides(p, z, start);
    return {length_bound_holds_exact(p, exact_value(z)), sub(sides.rhs, sides.lhs, start),
            start.bits()};
  }
  Precision prec = start;
  for (;;) {
    auto sides = bound_sides(p, z, prec);
    if (sides.lhs.upper() <= sides.rhs.lower()) {
      return {true, sub(sides.rhs, sides.lhs, prec), prec.bits()};
    }
    if (sides.lhs.lower() > sides.rhs.upper()) {
      return {false, sub(sides.rhs, sides.lhs, prec), prec.bits()};
    }
    if (prec.bits() * 2 > prec.cap()) {
      throw Undecidable("length bound: overlap persists at " + std::to_string(prec.bits()) +
                        " bits");
    }
    prec = prec.doubled();
  }
}

RatDivision divide(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw ZeroPolynomial();
  std::vector<mpq_class> rem(a.coeffs().begin(), a.coeffs().end());
  const long db = b.degree();
  const long da = a.degree();
  if (da < db) return {RatPolynomial(), a};
  std::vector<mpq_class> quot(static_cast<std::size_t>(da - db + 1), mpq_class(0));
  const mpq_class& lead = b.leading();
  for (long k = da; k >= db; --k) {
    const mpq_class c = rem[static_cast<std::size_t>(k)] / lead;
    if (c == 0) continue;
    quot[static_cast<std::size_t>(k - db)] = c;
    for (long j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(k - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  return {RatPolynomial(std::move(quot)), RatPolynomial(std::move(rem))};
}

bool divides(const IntPolynomial& d, const IntPolynomial& p) {
  if (p.is_zero()) return true;
  if (d.is_zero()) return false;
  if (d.degree() > p.degree()) return false;
  return divide(to_rational(p), to_rational(d)).remainder.is_zero();
}

namespace {
RatPolynomial make_monic(const RatPolynomial& p) {
  if (p.is_zero()) return p;
  return mpq_class(1 / p.leading()) * p;
}
}  // namespace

RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b) {
  RatPolynomial x = a;
  RatPolynomial y = b;
  while (!y.is_zero()) {
    RatPolynomial r = divide(x, y).remainder;
    x = std::move(y);
    y = make_monic(r);
  }
  return make_monic(x);
}

mpz_class content(const IntPolynomial& p) {
  mpz_class g = 0;
  for (const auto& c : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  mpz_class g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<mpz_class> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.emplace_back(c / g);
  return IntPolynomial(std::move(v));
}

IntPolynomial primitive_part(const RatPolynomial& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.emplace_back(mpq_class(c * l).get_num());
  return primitive_part(IntPolynomial(std::move(v)));
}

// ---------------------------------------------------------------------------
// Text forms

namespace {

template <class Coeff>
std::string to_text_impl(const Polynomial<Coeff>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (long k = p.degree(); k >= 0; --k) {
    const Coeff& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Coeff mag = abs(c);
    if (k == 0 || mag != 1) out += mag.get_str();
    if (k >= 1) out += "z";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

template <class Coeff>
std::string to_json_impl(const Polynomial<Coeff>& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
  return arr.dump();
}

}  // namespace

std::string to_text(const IntPolynomial& p) { return to_text_impl(p); }
std::string to_text(const RatPolynomial& p) { return to_text_impl(p); }
std::string to_json_array(const IntPolynomial& p) { return to_json_impl(p); }
std::string to_json_array(const RatPolynomial& p) { return to_json_impl(p); }

mpq_class parse_rational(std::string_view text) {
  const std::string s(text);
  auto fail = [&]() -> ParseError { return ParseError("not an exact number: '" + s + "'"); };
  if (s.empty()) throw fail();
  std::size_t i = 0;
  bool negative = false;
  if (s[i] == '+' || s[i] == '-') negative = (s[i++] == '-');
  auto digits = [&](std::string& out) {
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) out += s[i++];
  };
  std::string whole;
  digits(whole);
  mpq_class value;
  if (i < s.size() && s[i] == '/') {
    ++i;
    std::string den;
    digits(den);
    if (whole.empty() || den.empty() || i != s.size()) throw fail();
    mpz_class d(den, 10);
    if (d == 0) throw ParseError("zero denominator in '" + s + "'");
    value = mpq_class(mpz_class(whole, 10), d);
    value.canonicalize();
  } else {
    std::string frac;
    if (i < s.size() && s[i] == '.') {
      ++i;
      digits(frac);
    }
    if (whole.empty() && frac.empty()) throw fail();
    long exponent = 0;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
      ++i;
      bool eneg = false;
      if (i < s.size() && (s[i] == '+' || s[i] == '-')) eneg = (s[i++] == '-');
      std::string ed;
      digits(ed);
      if (ed.empty() || ed.size() > 9) throw fail();
      exponent = std::stol(ed) * (eneg ? -1 : 1);
    }
    if (i != s.size()) throw fail();
    mpz_class num((whole.empty() ? std::string("0") : whole) + frac, 10);
    exponent -= static_cast<long>(frac.size());
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    value = exponent < 0 ? mpq_class(num, scale) : mpq_class(num * scale);
    value.canonicalize();
  }
  return negative ? mpq_class(-value) : value;
}

RatPolynomial parse_polynomial(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw ParseError("empty polynomial");
  std::vector<mpq_class> coeffs;
  std::size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    } else if (!first) {
      throw ParseError("expected '+' or '-' in polynomial '" + s + "'");
    }
    first = false;
    // Coefficient: everything up to 'z' or the next top-level sign.
    std::size_t j = i;
    while (j < s.size() && s[j] != 'z' && s[j] != '*' &&
           !((s[j] == '+' || s[j] == '-') && j > i && s[j - 1] != 'e' && s[j - 1] != 'E')) {
      ++j;
    }
    mpq_class c = 1;
    const bool has_coeff = j > i;
    if (has_coeff) c = parse_rational(std::string_view(s).substr(i, j - i));
    i = j;
    if (i < s.size() && s[i] == '*') {
      if (!has_coeff) throw ParseError("dangling '*' in polynomial '" + s + "'");
      ++i;
      if (i >= s.size() || s[i] != 'z') throw ParseError("expected 'z' after '*' in '" + s + "'");
    }
    std::size_t power = 0;
    if (i < s.size() && s[i] == 'z') {
      ++i;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t k = i;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == i || k - i > 6) throw ParseError("bad exponent in polynomial '" + s + "'");
        power = std::stoul(s.substr(i, k - i));
        i = k;
      }
    } else if (!has_coeff) {
      throw ParseError("empty term in polynomial '" + s + "'");
    }
    if (coeffs.size() <= power) coeffs.resize(power + 1, mpq_class(0));
    coeffs[power] += negative ? mpq_class(-c) : c;
  }
  return RatPolynomial(std::move(coeffs));
}

RatPolynomial parse_coefficients(std::string_view text) {
  std::vector<mpq_class> coeffs;
  std::string s(text);
  auto first = s.find_first_not_of(" \t");
  if (first != std::string::npos && s[first] == '[') {
    nlohmann::json arr;
    try {
      arr = nlohmann::json::parse(s);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("bad coefficient array: ") + e.what());
    }
    if (!arr.is_array()) throw ParseError("coefficient list must be a JSON array");
    for (const auto& item : arr) {
      if (item.is_string()) {
        coeffs.push_back(parse_rational(item.get<std::string>()));
      } else if (item.is_number_integer()) {
        coeffs.emplace_back(mpz_class(item.dump(), 10));
      } else {
        throw ParseError("coefficients must be integers or exact strings");
      }
    }
  } else {
    std::size_t start = 0;
    while (start <= s.size()) {
      auto comma = s.find(',', start);
      if (comma == std::string::npos) comma = s.size();
      std::string item = s.substr(start, comma - start);
      item.erase(std::remove_if(item.begin(), item.end(),
                                [](unsigned char c) { return std::isspace(c); }),
                 item.end());
      coeffs.push_back(parse_rational(item));
      start = comma + 1;
    }
  }
  return RatPolynomial(std::move(coeffs));
}

}  // namespace transkit
