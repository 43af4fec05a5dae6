#pragma once

// Seeded property suites, shared by the command line tool and the tests.
//
//   lemma7     |P(z)| <= L(P) max(1,|z|)^deg P, exact at rational z
//   lemma6     the product-sum construction is null iff all a_k are 0
//   symmetric  expand_roots coefficients are the signed sigma_k
//   baker      e^(-1) g(z) e^(-pi z) = 1 to 10^-40 at 200 bits
//   ubound     |U(w, z)| <= e^max(1,|z|)

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace transkit {

/// Platform-independent draws on top of mt19937_64 (whose output sequence is
/// fixed by the standard, unlike the std distributions).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  /// Uniform in [lo, hi], by rejection.
  long uniform(long lo, long hi);
  /// p/q with p uniform in [-num, num] and q uniform in [1, den].
  mpq_class rational(long num, long den);
  bool coin() { return (gen_() >> 63) != 0; }

 private:
  std::mt19937_64 gen_;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  long count = 0;
  long passed = 0;
  long failed = 0;
  /// Descriptions of the first few failures.
  std::vector<std::string> failures;
};

std::vector<std::string_view> suite_names();

/// Throws std::invalid_argument for an unknown suite or count < 1.
SuiteReport run_suite(std::string_view name, std::uint64_t seed, long count);

}  // namespace transkit
