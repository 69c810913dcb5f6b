#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gcdmat/rational.hpp"

namespace gcdmat {

Int gcd(const Int& x, const Int& y);
Int lcm(const Int& x, const Int& y);

/// Variadic gcd over a nonempty span of values, folding left.
Int gcd_all(const std::vector<Int>& values);

/// mu(1) = 1, mu(n) = 0 when a square divides n, otherwise (-1)^k for a
/// product of k distinct primes.
int mobius(const Int& n);

/// All positive divisors of n in ascending order (trial division; the
/// library targets desk-scale operands).
std::vector<Int> divisors(const Int& n);

bool is_squarefree(const Int& n);

/// An arithmetic function mapping positive integers to rationals. The two
/// builtins are the power map x -> x^a and its reciprocal x -> x^-a; custom
/// evaluators are accepted wherever a formula is stated for arbitrary f.
class ArithmeticFn {
 public:
  static ArithmeticFn power(unsigned a) { return ArithmeticFn(Kind::kPower, a, "xi(" + std::to_string(a) + ")"); }
  static ArithmeticFn inverse_power(unsigned a) {
    return ArithmeticFn(Kind::kInversePower, a, "inv_xi(" + std::to_string(a) + ")");
  }
  static ArithmeticFn custom(std::string name, std::function<Rational(const Int&)> eval) {
    ArithmeticFn fn(Kind::kCustom, 0, std::move(name));
    fn.eval_ = std::move(eval);
    return fn;
  }

  Rational operator()(const Int& x) const {
    switch (kind_) {
      case Kind::kPower:
        return Rational(pow(x, exponent_));
      case Kind::kInversePower:
        return Rational(Int(1), pow(x, exponent_));
      case Kind::kCustom:
        return eval_(x);
    }
    throw Error("unreachable");
  }

  bool is_power() const { return kind_ == Kind::kPower; }
  bool is_inverse_power() const { return kind_ == Kind::kInversePower; }
  unsigned exponent() const {
    if (kind_ == Kind::kCustom) throw UnsupportedFnError(name_);
    return exponent_;
  }
  const std::string& name() const { return name_; }

 private:
  enum class Kind { kPower, kInversePower, kCustom };
  ArithmeticFn(Kind kind, unsigned exponent, std::string name)
      : kind_(kind), exponent_(exponent), name_(std::move(name)) {}

  Kind kind_;
  unsigned exponent_;
  std::string name_;
  std::function<Rational(const Int&)> eval_;
};

/// Dirichlet convolution of f with the Moebius function:
/// sum over d | n of f(d) * mu(n/d). For f = xi(1) this is Euler's totient.
Rational conv_mobius(const ArithmeticFn& f, const Int& n);

}  // namespace gcdmat
