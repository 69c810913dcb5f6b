#include "gcdmat/exact_matrix.hpp"

#include <utility>
#include <vector>

#include "gcdmat/errors.hpp"

namespace gcdmat {

ExactMatrix build_gcd_matrix(const GcdSet& s, const ArithmeticFn& f) {
  const auto n = static_cast<Eigen::Index>(s.size());
  ExactMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      Rational v = f(gcd(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(j)]));
      m(j, i) = v;
      m(i, j) = std::move(v);
    }
  }
  return m;
}

ExactMatrix build_lcm_matrix(const GcdSet& s, unsigned a) {
  const auto n = static_cast<Eigen::Index>(s.size());
  ExactMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      Rational v(pow(lcm(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(j)]), a));
      m(j, i) = v;
      m(i, j) = std::move(v);
    }
  }
  return m;
}

Rational det_oracle(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatchError();
  const auto n = static_cast<std::size_t>(m.rows());
  if (n == 0) return Rational(1);  // empty-product convention

  // Scale each row to integers, collecting the denominators.
  std::vector<std::vector<Int>> w(n, std::vector<Int>(n));
  Rational scale(1);
  for (std::size_t i = 0; i < n; ++i) {
    Int den(1);
    for (std::size_t j = 0; j < n; ++j)
      den = lcm(den, m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)).den());
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& e = m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      w[i][j] = e.num() * (den / e.den());
    }
    scale = scale * Rational(Int(1), den);
  }

  // Fraction-free elimination; every division below is exact.
  Int prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w[k][k] == 0) {
      std::size_t p = k;
      while (p < n && w[p][k] == 0) ++p;
      if (p == n) return Rational(0);
      std::swap(w[k], w[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        w[i][j] = (w[i][j] * w[k][k] - w[i][k] * w[k][j]) / prev;
      w[i][k] = 0;
    }
    prev = w[k][k];
  }
  Rational det(std::move(w[n - 1][n - 1]));
  if (sign < 0) det = -det;
  return det * scale;
}

ExactMatrix inverse_oracle(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatchError();
  const Eigen::Index n = m.rows();
  ExactMatrix a = m;
  ExactMatrix inv = ExactMatrix::Identity(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) throw SingularMatrixError();
    if (p != k) {
      a.row(k).swap(a.row(p));
      inv.row(k).swap(inv.row(p));
    }
    const Rational pivot = a(k, k);
    for (Eigen::Index j = 0; j < n; ++j) {
      a(k, j) /= pivot;
      inv(k, j) /= pivot;
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == k || a(i, k).is_zero()) continue;
      const Rational factor = a(i, k);
      for (Eigen::Index j = 0; j < n; ++j) {
        a(i, j) -= factor * a(k, j);
        inv(i, j) -= factor * inv(k, j);
      }
    }
  }
  return inv;
}

bool is_integral(const ExactMatrix& m) { return !first_non_integral(m).has_value(); }

std::optional<std::pair<Eigen::Index, Eigen::Index>> first_non_integral(const ExactMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_integer()) return std::make_pair(i + 1, j + 1);
  return std::nullopt;
}

std::string format_matrix(const ExactMatrix& m) {
  std::string out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out += '\t';
      out += m(i, j).str();
    }
    out += '\n';
  }
  return out;
}

}  // namespace gcdmat
