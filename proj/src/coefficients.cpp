#include "gcdmat/coefficients.hpp"

#include <algorithm>

#include "gcdmat/errors.hpp"

namespace gcdmat {

namespace {

// d divides no element of S smaller than s[k].
bool divides_no_smaller(const GcdSet& s, std::size_t k, const Int& d) {
  for (std::size_t t = 0; t < k; ++t)
    if (s[t] % d == 0) return false;
  return true;
}

Rational alpha_def_unchecked(const GcdSet& s, std::size_t k, const ArithmeticFn& f) {
  Rational sum(0);
  for (const Int& d : divisors(s[k]))
    if (divides_no_smaller(s, k, d)) sum += conv_mobius(f, d);
  return sum;
}

std::int64_t c_def_unchecked(const GcdSet& s, std::size_t i, std::size_t j) {
  if (s[j] % s[i] != 0) return 0;
  std::int64_t sum = 0;
  for (const Int& d : divisors(s[j] / s[i]))
    if (divides_no_smaller(s, j, d * s[i])) sum += mobius(d);
  return sum;
}

}  // namespace

Rational alpha_def(const GcdSet& s, std::size_t k, const ArithmeticFn& f) {
  if (k >= s.size()) throw IndexOutOfRangeError();
  if (!is_gcd_closed(s)) throw NotGcdClosedError();
  return alpha_def_unchecked(s, k, f);
}

Rational alpha_gtd(const GcdSet& s, std::size_t k, const ArithmeticFn& f) {
  if (k >= s.size()) throw IndexOutOfRangeError();
  if (!is_gcd_closed(s)) throw NotGcdClosedError();
  if (!f.is_power() && !f.is_inverse_power()) throw UnsupportedFnError(f.name());

  const std::vector<Int> g = greatest_type_divisors(s, s[k]);
  if (g.size() > 63) throw GtdTooLargeError();  // subset masks below
  Rational sum = f(s[k]);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.size()); ++mask) {
    Int d = s[k];
    int bits = 0;
    for (std::size_t t = 0; t < g.size(); ++t) {
      if (mask & (std::uint64_t{1} << t)) {
        d = gcd(d, g[t]);
        ++bits;
      }
    }
    if (bits % 2 == 1)
      sum -= f(d);
    else
      sum += f(d);
  }
  return sum;
}

AlphaTable::AlphaTable(const GcdSet& s, const ArithmeticFn& f) {
  if (!is_gcd_closed(s)) throw NotGcdClosedError();
  values_.reserve(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) values_.push_back(alpha_def_unchecked(s, k, f));
}

std::int64_t c_def(const GcdSet& s, std::size_t i, std::size_t j) {
  if (i >= s.size() || j >= s.size()) throw IndexOutOfRangeError();
  if (!is_gcd_closed(s)) throw NotGcdClosedError();
  return c_def_unchecked(s, i, j);
}

std::int64_t c_closed(const GcdSet& s, std::size_t i, std::size_t j) {
  if (i >= s.size() || j >= s.size()) throw IndexOutOfRangeError();
  if (!is_gcd_closed(s)) throw NotGcdClosedError();

  const std::vector<Int> g = greatest_type_divisors(s, s[j]);
  switch (g.size()) {
    case 0:
      return i == j ? 1 : 0;
    case 1:
      if (i == j) return 1;
      if (i == s.require_index(g[0])) return -1;
      return 0;
    case 2: {
      if (i == j) return 1;
      if (i == s.require_index(g[0]) || i == s.require_index(g[1])) return -1;
      if (i == s.require_index(gcd(g[0], g[1]))) return 1;
      return 0;
    }
    case 3: {
      if (!condition_g(s).holds) throw ConditionGViolatedError();
      if (i == j) return 1;
      for (std::size_t u = 0; u < 3; ++u)
        if (i == s.require_index(g[u])) return -1;
      for (std::size_t u = 0; u < 3; ++u)
        for (std::size_t v = u + 1; v < 3; ++v)
          if (i == s.require_index(gcd(g[u], g[v]))) return 1;
      if (i == s.require_index(gcd(gcd(g[0], g[1]), g[2]))) return -1;
      return 0;
    }
    default:
      throw GtdTooLargeError();
  }
}

CTable::CTable(const GcdSet& s) : n_(s.size()), values_(s.size() * s.size()) {
  if (!is_gcd_closed(s)) throw NotGcdClosedError();
  for (std::size_t j = 0; j < n_; ++j)
    for (std::size_t i = 0; i < n_; ++i) values_[i * n_ + j] = c_def_unchecked(s, i, j);
}

}  // namespace gcdmat
