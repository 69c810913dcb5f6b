#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "gcdmat/errors.hpp"

namespace gcdmat {

/// Arbitrary-precision signed integer. Everything in the library computes
/// with these; no operation may silently overflow.
using Int = boost::multiprecision::cpp_int;

inline Int pow(const Int& base, unsigned exp) { return boost::multiprecision::pow(base, exp); }

/// Exact rational number. Always stored fully reduced with a positive
/// denominator, so equality is structural and integrality is a single
/// denominator test.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Int n) : num_(std::move(n)), den_(1) {}  // NOLINT: implicit by design
  template <typename T>
    requires std::is_integral_v<T>
  Rational(T n) : num_(n), den_(1) {}  // NOLINT
  Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  /// Numerator, asserting den == 1.
  const Int& as_integer() const {
    if (den_ != 1) throw Error("rational " + str() + " is not an integer");
    return num_;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw Error("division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const Int l = a.num_ * b.den_;
    const Int r = b.num_ * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Renders as "p/q", or just "p" when the denominator is 1.
  std::string str() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
  }

  /// Parses "p" or "p/q" with optional sign; the result is normalized.
  static Rational parse(std::string_view text);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  void normalize() {
    if (den_ == 0) throw Error("zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  Int num_;
  Int den_;
};

inline Rational abs(const Rational& r) { return r < Rational(0) ? -r : r; }

/// Integer power with negative exponents allowed (exact inversion).
inline Rational pow(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  const unsigned e = static_cast<unsigned>(exp < 0 ? -exp : exp);
  Rational p(pow(base.num(), e), pow(base.den(), e));
  if (exp < 0) return Rational(1) / p;
  return p;
}

inline Rational Rational::parse(std::string_view text) {
  const auto bad = [&] { return ParseError("invalid rational: '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  const auto parse_int = [&](std::string_view part) {
    if (part.empty()) throw bad();
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) throw bad();
    for (std::size_t i = start; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') throw bad();
    return Int(std::string(part));
  };
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

}  // namespace gcdmat

namespace Eigen {

template <>
struct NumTraits<gcdmat::Rational> : GenericNumTraits<gcdmat::Rational> {
  using Real = gcdmat::Rational;
  using NonInteger = gcdmat::Rational;
  using Nested = gcdmat::Rational;
  using Literal = int;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 200,
    MulCost = 100,
  };
  static inline Real epsilon() { return gcdmat::Rational(0); }
  static inline Real dummy_precision() { return gcdmat::Rational(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
