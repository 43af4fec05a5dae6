#include "literals.hpp"

#include <cctype>
#include <string>

#include "transkit/errors.hpp"

namespace transkit::cli {

GaussianRational parse_complex(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw ParseError("empty complex literal");
  if (s.back() != 'i') return GaussianRational(parse_rational(s));
  s.pop_back();
  // Split before the last sign that is not leading and not an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  const std::string re = split == std::string::npos ? "" : s.substr(0, split);
  std::string im = split == std::string::npos ? s : s.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  if (!im.empty() && im.front() == '+') im.erase(0, 1);
  return {re.empty() ? mpq_class(0) : parse_rational(re), parse_rational(im)};
}

UPoint parse_point(std::string_view text) {
  if (text.starts_with("alpha:")) {
    const std::string k(text.substr(6));
    if (k.empty() || k.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("bad enumeration index in '" + std::string(text) + "'");
    }
    const unsigned long j = std::stoul(k);
    if (j == 0) throw ParseError("enumeration indices start at 1");
    return UPoint::alpha(j);
  }
  return UPoint::exact(parse_complex(text));
}

Xi parse_xi(std::string_view text) {
  if (text == "pi") return Xi(NamedConstant::pi);
  if (text == "e") return Xi(NamedConstant::e);
  if (text == "liouville") return Xi(NamedConstant::liouville);
  if (text.starts_with("rat:")) return Xi::rational(parse_rational(text.substr(4)));
  if (text.starts_with("alg:")) {
    const std::string_view rest = text.substr(4);
    const auto colon = rest.rfind(':');
    if (colon == std::string_view::npos) throw ParseError("expected alg:<coeffs>:<root_index>");
    const IntPolynomial p = to_integer(parse_coefficients(rest.substr(0, colon)));
    const std::string idx(rest.substr(colon + 1));
    if (idx.empty() || idx.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("bad root index '" + idx + "'");
    }
    try {
      return Xi(make_algebraic(p, std::stoul(idx)));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("unknown xi '" + std::string(text) + "' (rat:p/q, alg:<coeffs>:<k>, pi, e, liouville)");
}

}  // namespace transkit::cli
