#pragma once

#include <stdexcept>
#include <string>

namespace transkit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisorContainsZero : public Error {
 public:
  DivisorContainsZero() : Error("divisor ball contains zero") {}
};

/// A computation needed more working precision than the configured cap.
class PrecisionCapExceeded : public Error {
 public:
  explicit PrecisionCapExceeded(long requested, long cap)
      : Error("precision cap exceeded: requested " + std::to_string(requested) +
              " bits, cap is " + std::to_string(cap)) {}
};

class ZeroPolynomial : public Error {
 public:
  ZeroPolynomial() : Error("operation undefined for the zero polynomial") {}
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// Ball overlap persisted up to the precision cap (near-equality, not a counterexample).
class Undecidable : public Error {
 public:
  using Error::Error;
};

/// Enumeration index beyond the configured maximum.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class IsolationFailure : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class UndecidableZero : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace transkit
