#pragma once

#include <cstdint>
#include <vector>

#include "gcdmat/gcd_set.hpp"

namespace gcdmat {

/// The per-element coefficient alpha_f(x_k): sum of (f * mu)(d) over the
/// divisors d of x_k dividing no smaller element of S. These are the
/// factors of the structured determinants and the denominators of the
/// structured inverses. Requires a gcd-closed set.
Rational alpha_def(const GcdSet& s, std::size_t k, const ArithmeticFn& f);

/// The same coefficient by inclusion-exclusion over the greatest-type
/// divisors of x_k: f(x_k) plus, for every nonempty subset T of G(x_k),
/// (-1)^|T| f(gcd(x_k, T)). Only defined for the power and inverse-power
/// builtins; must agree with alpha_def everywhere.
Rational alpha_gtd(const GcdSet& s, std::size_t k, const ArithmeticFn& f);

/// Memoized alpha values for one (set, function) pair.
class AlphaTable {
 public:
  AlphaTable(const GcdSet& s, const ArithmeticFn& f);
  const Rational& operator[](std::size_t k) const { return values_[k]; }
  std::size_t size() const { return values_.size(); }

 private:
  std::vector<Rational> values_;
};

/// The Moebius-sum coefficient c_{ij}: sum of mu(d) over d with
/// d*x_i | x_j and d*x_i dividing no smaller element of S. Zero whenever
/// x_i does not divide x_j; c_{jj} = 1. Requires a gcd-closed set.
std::int64_t c_def(const GcdSet& s, std::size_t i, std::size_t j);

/// Closed-form c_{ij}, dispatching on |G(x_j)|:
///   0 gtds: 1 at i == j, else 0 (x_j is the set minimum);
///   1 gtd y: +1 at j, -1 at y, else 0;
///   2 gtds u, v: +1 at j and gcd(u,v), -1 at u and v, else 0;
///   3 gtds: +1 at j and the three pairwise gcds, -1 at the three gtds
///   and their common gcd, else 0 (needs the pairwise condition on
///   greatest-type divisors to hold set-wide).
/// Throws GtdTooLargeError above three and ConditionGViolatedError when
/// the three-divisor case lacks its hypothesis.
std::int64_t c_closed(const GcdSet& s, std::size_t i, std::size_t j);

/// Memoized c_def values for one set.
class CTable {
 public:
  explicit CTable(const GcdSet& s);
  std::int64_t operator()(std::size_t i, std::size_t j) const { return values_[i * n_ + j]; }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  std::vector<std::int64_t> values_;
};

}  // namespace gcdmat
