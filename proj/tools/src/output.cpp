#include "output.hpp"

#include <cmath>
#include <ostream>

namespace transkit::cli {

namespace {

std::size_t digits_for(const BallReal& x) {
  const std::size_t full = mpfr_get_str_ndigits(10, x.mid().bits());
  if (x.rad().is_zero() || x.mid().is_zero()) return full;
  const long e_mid = mpfr_get_exp(x.mid().get());
  const long e_rad = mpfr_get_exp(x.rad().get());
  const long extra = static_cast<long>(std::ceil((e_mid - e_rad) * 0.30103)) + 3;
  return static_cast<std::size_t>(std::clamp<long>(extra, 3, static_cast<long>(full)));
}

void flatten(const ordered_json& j, const std::string& prefix, ordered_json& row) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, row);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), row);
  } else if (j.is_array()) {
    std::string s;
    for (const auto& v : j) s += (s.empty() ? "" : " ") + (v.is_string() ? v.get<std::string>() : v.dump());
    row[prefix] = s;
  } else {
    row[prefix] = j;
  }
}

std::string csv_cell(const ordered_json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

}  // namespace

ordered_json ball_json(const BallReal& x) {
  const std::string mid = x.mid().to_decimal(digits_for(x));
  const mpq_class printed = parse_rational(mid);
  const mpq_class err = abs(printed - x.mid().to_rational());
  Float rad = x.rad();
  if (err != 0) rad = add_up(rad, Float::from_q(err, kRadiusBits, MPFR_RNDU));
  // Three significant digits, rounded up.
  std::string r = rad.to_decimal(3, MPFR_RNDU);
  return {{"mid", mid}, {"rad", r}};
}

ordered_json ball_json(const BallComplex& z) { return {{"re", ball_json(z.re)}, {"im", ball_json(z.im)}}; }

ordered_json float_json(const Float& x) { return x.to_decimal(6, MPFR_RNDU); }

ordered_json poly_json(const IntPolynomial& p) { return ordered_json::parse(to_json_array(p)); }

void emit(std::ostream& out, const ordered_json& record, Format format) {
  if (format == Format::json) {
    out << record.dump() << '\n';
    return;
  }
  std::vector<ordered_json> rows;
  const ordered_json& result = record["result"];
  ordered_json base;
  base["command"] = record["command"];
  if (result.is_array()) {
    for (const auto& item : result) {
      ordered_json row = base;
      flatten(item, "", row);
      rows.push_back(row);
    }
  } else {
    ordered_json row = base;
    flatten(result, "", row);
    rows.push_back(row);
  }
  std::vector<std::string> columns;
  for (const auto& row : rows) {
    for (const auto& [k, v] : row.items()) {
      if (std::find(columns.begin(), columns.end(), k) == columns.end()) columns.push_back(k);
    }
  }
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      out << (i ? "," : "");
      if (row.contains(columns[i])) out << csv_cell(row[columns[i]]);
    }
    out << '\n';
  }
}

}  // namespace transkit::cli
