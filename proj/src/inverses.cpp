#include "gcdmat/inverses.hpp"

#include "gcdmat/errors.hpp"

namespace gcdmat {

namespace {

// Common double-coefficient sum: entry (i, j) = sum over k with
// x_i | x_k and x_j | x_k of c_{ik} c_{jk} / alpha(x_k).
ExactMatrix coefficient_inverse(const GcdSet& s, const CTable& c, const AlphaTable& alpha) {
  const auto n = static_cast<Eigen::Index>(s.size());
  ExactMatrix inv(n, n);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i; j < s.size(); ++j) {
      Rational sum(0);
      for (std::size_t k = std::max(i, j); k < s.size(); ++k) {
        if (s[k] % s[i] != 0 || s[k] % s[j] != 0) continue;
        const std::int64_t cc = c(i, k) * c(j, k);
        if (cc == 0) continue;
        if (alpha[k].is_zero()) throw AlphaZeroError();
        sum += Rational(Int(cc)) / alpha[k];
      }
      inv(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = sum;
      inv(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = std::move(sum);
    }
  }
  return inv;
}

}  // namespace

ExactMatrix inverse_gcd_structured(const GcdSet& s, unsigned a) {
  return inverse_gcd_structured(s, a, CTable(s), AlphaTable(s, ArithmeticFn::power(a)));
}

ExactMatrix inverse_gcd_structured(const GcdSet& s, unsigned a, const CTable& c,
                                   const AlphaTable& alpha) {
  (void)a;
  return coefficient_inverse(s, c, alpha);
}

ExactMatrix inverse_lcm_structured(const GcdSet& s, unsigned a) {
  return inverse_lcm_structured(s, a, CTable(s), AlphaTable(s, ArithmeticFn::inverse_power(a)));
}

ExactMatrix inverse_lcm_structured(const GcdSet& s, unsigned a, const CTable& c,
                                   const AlphaTable& alpha_inv) {
  if (max_gtd(s) > 3) throw GtdTooLargeError();
  ExactMatrix inv = coefficient_inverse(s, c, alpha_inv);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Rational pi(Int(1), pow(s[i], a));
    for (std::size_t j = 0; j < s.size(); ++j) {
      inv(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) *=
          pi * Rational(Int(1), pow(s[j], a));
    }
  }
  return inv;
}

}  // namespace gcdmat
