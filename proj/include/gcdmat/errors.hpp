#pragma once

#include <stdexcept>
#include <string>

namespace gcdmat {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (set literals, rationals, config values).
/// The message names the offending token.
struct ParseError : Error {
  using Error::Error;
};

struct EmptySetError : ParseError {
  EmptySetError() : ParseError("set literal is empty") {}
};

struct DuplicateElementError : ParseError {
  explicit DuplicateElementError(const std::string& element)
      : ParseError("duplicate element: " + element) {}
};

struct NotInSetError : Error {
  explicit NotInSetError(const std::string& element)
      : Error("element not in set: " + element) {}
};

struct NotGcdClosedError : Error {
  NotGcdClosedError() : Error("set is not gcd closed") {}
};

struct NotFactorClosedError : Error {
  NotFactorClosedError() : Error("set is not factor closed") {}
};

struct ConditionGViolatedError : Error {
  ConditionGViolatedError() : Error("set violates the pairwise lcm/gcd closure condition") {}
};

/// Raised where a closed form only covers elements with at most three
/// greatest-type divisors.
struct GtdTooLargeError : Error {
  GtdTooLargeError() : Error("element has more than three greatest-type divisors") {}
};

struct AlphaZeroError : Error {
  AlphaZeroError() : Error("structured coefficient vanished; formula inapplicable") {}
};

struct SingularMatrixError : Error {
  SingularMatrixError() : Error("matrix is singular") {}
};

struct DimensionMismatchError : Error {
  DimensionMismatchError() : Error("matrix dimensions do not match") {}
};

struct NotADivisorError : Error {
  explicit NotADivisorError(const std::string& what_arg) : Error(what_arg) {}
};

/// Raised by checks whose statements require the first exponent to divide
/// the second.
struct NotDividingError : Error {
  NotDividingError() : Error("exponent a does not divide exponent b") {}
};

struct UnsupportedFnError : Error {
  explicit UnsupportedFnError(const std::string& fn)
      : Error("operation not defined for arithmetic function " + fn) {}
};

struct IndexOutOfRangeError : Error {
  IndexOutOfRangeError() : Error("index out of range") {}
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace gcdmat
