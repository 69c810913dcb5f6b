#pragma once

#include <Eigen/Dense>

#include <optional>
#include <string>

#include "gcdmat/gcd_set.hpp"
#include "gcdmat/rational.hpp"

namespace gcdmat {

/// Dense square matrix of exact rationals.
using ExactMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

/// (f(S)): entry (i, j) = f(gcd(x_i, x_j)). Symmetric by construction.
ExactMatrix build_gcd_matrix(const GcdSet& s, const ArithmeticFn& f);

/// [S^a]: entry (i, j) = lcm(x_i, x_j)^a.
ExactMatrix build_lcm_matrix(const GcdSet& s, unsigned a);

/// Exact determinant by fraction-free elimination. Rows are scaled to a
/// common integer form first, so the elimination itself runs over integers
/// with exact divisions; pivoting picks the first nonzero entry. This is
/// the independent oracle every structured determinant is checked against.
Rational det_oracle(const ExactMatrix& m);

/// Exact inverse by Gauss-Jordan elimination with first-nonzero pivoting.
/// Throws SingularMatrixError. M * inverse_oracle(M) is exactly the
/// identity.
ExactMatrix inverse_oracle(const ExactMatrix& m);

/// True iff every entry has denominator 1.
bool is_integral(const ExactMatrix& m);

/// First entry (row-major) with denominator > 1, as 1-based (row, col),
/// or nullopt when the matrix is integral.
std::optional<std::pair<Eigen::Index, Eigen::Index>> first_non_integral(const ExactMatrix& m);

/// Row-major text rendering: entries "p/q" (q omitted when 1), columns
/// tab-separated, one row per line.
std::string format_matrix(const ExactMatrix& m);

}  // namespace gcdmat
