#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "literals.hpp"
#include "output.hpp"
#include "transkit/checks.hpp"
#include "transkit/errors.hpp"
#include "transkit/functions.hpp"
#include "transkit/mahler.hpp"
#include "transkit/qbar.hpp"
#include "transkit/series_u.hpp"

using namespace transkit;
using transkit::cli::ordered_json;

namespace {

enum Exit : int { kOk = 0, kFailure = 1, kUsage = 2, kBudget = 3, kPrecision = 4, kProperty = 5 };

constexpr const char* kLiteralHelp =
    "Complex literals: a, a+bi, a-bi, bi, i with integer, p/q or exact decimal parts "
    "(e.g. 1/3-0.25i, 2e-3+i).";

Float parse_radius(const std::string& text) {
  const mpq_class r = parse_rational(text);
  if (r <= 0) throw ParseError("radius must be positive");
  return Float::from_q(r, kRadiusBits, MPFR_RNDD);
}

ordered_json record(const std::string& command, ordered_json inputs, ordered_json result, long bits) {
  ordered_json r;
  r["command"] = command;
  r["inputs"] = std::move(inputs);
  r["result"] = std::move(result);
  r["precision"] = {{"bits", bits}};
  return r;
}

ordered_json algebraic_json(std::size_t k, const AlgebraicNumber& a) {
  ordered_json j;
  j["k"] = k;
  j["minpoly"] = cli::poly_json(a.minpoly);
  j["text"] = to_text(a.minpoly);
  j["root_index"] = a.root_index;
  j["value"] = cli::ball_json(a.isol);
  return j;
}

ordered_json omega_json(const OmegaResult& r) {
  ordered_json j;
  j["omega"] = cli::ball_json(r.omega_min);
  j["exponent"] = r.exponent ? cli::ball_json(*r.exponent) : ordered_json(nullptr);
  j["argmin"] = cli::poly_json(r.argmin);
  j["zeros_excluded"] = r.zeros_excluded;
  j["scanned"] = r.candidates_scanned;
  j["tie_unresolved"] = r.tie_unresolved;
  auto undecidable = ordered_json::array();
  for (const auto& p : r.undecidable) undecidable.push_back(cli::poly_json(p));
  j["undecidable"] = undecidable;
  return j;
}

// Evaluates fn at z, doubling precision until each radius is within target.
BallComplex eval_to_radius(const std::function<BallComplex(const BallComplex&, Precision)>& fn,
                           const GaussianRational& z, const Float& target, long cap, long& bits_out) {
  for (long bits = Precision::bits_for_radius(target, 16);; bits *= 2) {
    if (bits > cap) throw PrecisionCapExceeded(bits, cap);
    const Precision prec(bits, cap);
    const BallComplex r = fn(z.to_ball(prec.with_bits(bits + 16)), prec);
    if (r.max_rad() <= target) {
      bits_out = bits;
      return r;
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified computations around algebraic and transcendental numbers."};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format_name = "json";
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"json", "csv"}));
  long cap = kDefaultBitsCap;
  app.add_option("--max-bits", cap, "Precision cap in bits")->check(CLI::Range(64L, kDefaultBitsCap));

  // qbar
  auto* qbar = app.add_subcommand("qbar", "List the first algebraic numbers in enumeration order");
  long qbar_count = 0;
  std::string qbar_cache;
  qbar->add_option("--count", qbar_count, "How many numbers")->required()->check(CLI::PositiveNumber);
  qbar->add_option("--cache", qbar_cache, "JSON-lines cache file: read if present, then rewritten");

  // u
  auto* u = app.add_subcommand("u", std::string("Evaluate U(w, z). ") + kLiteralHelp);
  std::string u_w, u_z, u_radius = "1e-20";
  u->add_option("--w", u_w, "w (complex literal)")->required();
  u->add_option("--z", u_z, "z (complex literal or alpha:k)")->required();
  u->add_option("--radius", u_radius, "Target radius");

  // omega
  auto* om = app.add_subcommand("omega", "Omega_n(xi, H) and omega_n(xi, H) by exhaustive search");
  std::string om_xi;
  long om_n = 1;
  std::vector<long> om_H;
  std::uint64_t om_budget = kDefaultOmegaBudget;
  unsigned om_workers = 1;
  bool om_reverse = false;
  om->add_option("--xi", om_xi, "rat:p/q | alg:<coeffs>:<root_index> | pi | e | liouville")->required();
  om->add_option("--n", om_n, "Degree bound")->required()->check(CLI::PositiveNumber);
  om->add_option("--H", om_H, "Height bound; several values give a trajectory")
      ->required()
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  om->add_option("--budget", om_budget, "Maximum number of candidates");
  om->add_option("--workers", om_workers, "Worker threads (0 = all cores)");
  om->add_flag("--reverse", om_reverse, "Scan candidates in descending order");

  // liouville
  auto* lv = app.add_subcommand("liouville", "The Liouville constant or a Liouville witness");
  std::string lv_radius;
  long lv_witness = 0;
  auto* lv_r = lv->add_option("--radius", lv_radius, "Enclose the constant to this radius");
  auto* lv_w = lv->add_option("--witness", lv_witness, "Exponent n of the witness")->check(CLI::PositiveNumber);
  lv_r->excludes(lv_w);
  lv->require_option(1);

  // fn
  auto* fn = app.add_subcommand("fn", std::string("Evaluate f, g, h or ee = e^(e^z). ") + kLiteralHelp);
  std::string fn_name, fn_z, fn_radius = "1e-20";
  fn->add_option("name", fn_name, "f | g | h | ee")->required()->check(CLI::IsMember({"f", "g", "h", "ee"}));
  fn->add_option("--z", fn_z, "z (complex literal)")->required();
  fn->add_option("--radius", fn_radius, "Target radius");

  // check
  auto* ck = app.add_subcommand("check", "Run a seeded property suite");
  std::string ck_suite;
  std::uint64_t ck_seed = 1;
  long ck_count = 100;
  std::vector<std::string> names;
  for (auto n : suite_names()) names.emplace_back(n);
  ck->add_option("--suite", ck_suite, "Suite name")->required()->check(CLI::IsMember(names));
  ck->add_option("--seed", ck_seed, "RNG seed");
  ck->add_option("--count", ck_count, "Number of cases")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  const auto format = format_name == "csv" ? cli::Format::csv : cli::Format::json;

  try {
    if (*qbar) {
      QbarEnumeration e;
      if (!qbar_cache.empty() && std::filesystem::exists(qbar_cache)) {
        std::ifstream in(qbar_cache);
        e.load_cache(in);
      }
      auto list = ordered_json::array();
      for (long k = 1; k <= qbar_count; ++k) list.push_back(algebraic_json(k, e.at(k)));
      if (!qbar_cache.empty()) {
        std::ofstream out(qbar_cache);
        if (!out) throw std::runtime_error("cannot write " + qbar_cache);
        e.write_cache(out, static_cast<std::size_t>(qbar_count));
      }
      cli::emit(std::cout, record("qbar", {{"count", qbar_count}}, list, kIsolationBits), format);
      return kOk;
    }

    if (*u) {
      QbarEnumeration e;
      const UPoint w = UPoint::exact(cli::parse_complex(u_w));
      const UPoint z = cli::parse_point(u_z);
      const UEvaluation r = u_eval(e, w, z, parse_radius(u_radius), cap);
      ordered_json res;
      res["value"] = cli::ball_json(r.value);
      res["N"] = r.truncation_N;
      res["tail_bound"] = cli::float_json(r.tail_bound);
      res["exact_path"] = r.exact_path;
      res["enumeration_id"] = r.enumeration_id;
      cli::emit(std::cout, record("u", {{"w", u_w}, {"z", u_z}, {"radius", u_radius}}, res, r.bits), format);
      return kOk;
    }

    if (*om) {
      OmegaQuery q{cli::parse_xi(om_xi), om_n, 1};
      q.budget = om_budget;
      q.workers = om_workers;
      q.reverse_scan = om_reverse;
      q.max_bits = std::min<long>(cap, 1 << 16);
      ordered_json inputs{{"xi", om_xi}, {"n", om_n}, {"H", om_H}, {"budget", om_budget}};
      bool inconclusive = false;
      long bits = 0;
      ordered_json res;
      if (om_H.size() == 1) {
        q.H = om_H.front();
        const OmegaResult r = omega_search(q);
        inconclusive = r.tie_unresolved || !r.undecidable.empty();
        bits = r.bits;
        res = omega_json(r);
      } else {
        res = ordered_json::array();
        for (const auto& p : omega_trajectory(q, om_H)) {
          ordered_json item{{"H", p.H}};
          item.update(omega_json(p.result));
          inconclusive = inconclusive || p.result.tie_unresolved || !p.result.undecidable.empty();
          bits = std::max(bits, p.result.bits);
          res.push_back(item);
        }
      }
      cli::emit(std::cout, record("omega", inputs, res, bits), format);
      return inconclusive ? kPrecision : kOk;
    }

    if (*lv) {
      if (!lv_radius.empty()) {
        const BallReal l = liouville_constant(parse_radius(lv_radius), cap);
        cli::emit(std::cout, record("liouville", {{"radius", lv_radius}}, {{"value", cli::ball_json(l)}},
                                    l.mid().bits()),
                  format);
        return kOk;
      }
      const LiouvilleWitness w = liouville_witness(lv_witness);
      ordered_json res;
      res["m"] = w.approx.m;
      res["p"] = w.approx.p.get_str();
      res["q"] = "10^" + factorial_exact(static_cast<unsigned long>(w.approx.m)).get_str();
      res["gap_lower"] = "10^-" + factorial_exact(static_cast<unsigned long>(w.approx.m + 1)).get_str();
      res["gap_upper"] = "2*10^-" + factorial_exact(static_cast<unsigned long>(w.approx.m + 1)).get_str();
      res["bound"] = "q^-" + std::to_string(w.n);
      res["holds"] = w.holds;
      cli::emit(std::cout, record("liouville", {{"witness", lv_witness}}, res, 0), format);
      return w.holds ? kOk : kProperty;
    }

    if (*fn) {
      std::function<BallComplex(const BallComplex&, Precision)> f;
      if (fn_name == "f") f = eval_f;
      else if (fn_name == "g") f = eval_g;
      else if (fn_name == "h") f = eval_h;
      else f = eval_double_exp;
      long bits = 0;
      const BallComplex v = eval_to_radius(f, cli::parse_complex(fn_z), parse_radius(fn_radius), cap, bits);
      cli::emit(std::cout,
                record("fn", {{"name", fn_name}, {"z", fn_z}, {"radius", fn_radius}}, {{"value", cli::ball_json(v)}},
                       bits),
                format);
      return kOk;
    }

    if (*ck) {
      const SuiteReport r = run_suite(ck_suite, ck_seed, ck_count);
      ordered_json res{{"suite", r.suite}, {"seed", r.seed},     {"count", r.count},
                       {"passed", r.passed}, {"failed", r.failed}, {"failures", r.failures}};
      cli::emit(std::cout, record("check", {{"suite", ck_suite}, {"seed", ck_seed}, {"count", ck_count}}, res, 0),
                format);
      return r.failed == 0 ? kOk : kProperty;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const CapExceeded& e) {
    std::cerr << "limit exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const PrecisionCapExceeded& e) {
    std::cerr << "precision: " << e.what() << '\n';
    return kPrecision;
  } catch (const Undecidable& e) {
    std::cerr << "precision: " << e.what() << '\n';
    return kPrecision;
  } catch (const UndecidableZero& e) {
    std::cerr << "precision: " << e.what() << '\n';
    return kPrecision;
  } catch (const IsolationFailure& e) {
    std::cerr << "precision: " << e.what() << '\n';
    return kPrecision;
  } catch (const ParseError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}
