#include "gcdmat/determinants.hpp"

#include "gcdmat/errors.hpp"

namespace gcdmat {

Rational det_smith(const GcdSet& s, const ArithmeticFn& f) {
  if (!is_factor_closed(s)) throw NotFactorClosedError();
  Rational det(1);
  for (const Int& x : s.elements()) det *= conv_mobius(f, x);
  return det;
}

Rational det_gcd_structured(const GcdSet& s, unsigned a) {
  const AlphaTable alpha(s, ArithmeticFn::power(a));
  Rational det(1);
  for (std::size_t k = 0; k < s.size(); ++k) det *= alpha[k];
  return det;
}

Rational det_lcm_structured(const GcdSet& s, unsigned a) {
  const AlphaTable alpha(s, ArithmeticFn::inverse_power(a));
  Rational det(1);
  for (std::size_t k = 0; k < s.size(); ++k) det *= Rational(pow(s[k], 2 * a)) * alpha[k];
  return det;
}

Rational det_minor_structured(const GcdSet& s, const ArithmeticFn& f, std::size_t t) {
  if (t >= s.size()) throw IndexOutOfRangeError();
  if (!is_factor_closed(s)) throw NotFactorClosedError();
  std::vector<Rational> conv;
  conv.reserve(s.size());
  for (const Int& x : s.elements()) conv.push_back(conv_mobius(f, x));
  Rational sum(0);
  for (std::size_t l = 0; l < s.size(); ++l) {
    if (s[l] % s[t] != 0 || !is_squarefree(s[l] / s[t])) continue;
    Rational prod(1);
    for (std::size_t k = 0; k < s.size(); ++k)
      if (k != l) prod *= conv[k];
    sum += prod;
  }
  return sum;
}

ExactMatrix delete_row_col(const ExactMatrix& m, std::size_t t) {
  const auto n = m.rows();
  if (static_cast<Eigen::Index>(t) >= n) throw IndexOutOfRangeError();
  ExactMatrix out(n - 1, n - 1);
  for (Eigen::Index i = 0, oi = 0; i < n; ++i) {
    if (i == static_cast<Eigen::Index>(t)) continue;
    for (Eigen::Index j = 0, oj = 0; j < n; ++j) {
      if (j == static_cast<Eigen::Index>(t)) continue;
      out(oi, oj) = m(i, j);
      ++oj;
    }
    ++oi;
  }
  return out;
}

}  // namespace gcdmat
