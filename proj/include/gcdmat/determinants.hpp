#pragma once

#include "gcdmat/coefficients.hpp"
#include "gcdmat/exact_matrix.hpp"

namespace gcdmat {

/// det (f(S)) for factor-closed S: the product of (f * mu)(x_k) over all
/// elements. Throws NotFactorClosedError.
Rational det_smith(const GcdSet& s, const ArithmeticFn& f);

/// det (S^a) for gcd-closed S: the product of alpha_{xi_a}(x_k).
Rational det_gcd_structured(const GcdSet& s, unsigned a);

/// det [S^a] for gcd-closed S: the product of x_k^{2a} * alpha_{1/xi_a}(x_k).
Rational det_lcm_structured(const GcdSet& s, unsigned a);

/// Determinant of (f(S)) with row and column t removed, for factor-closed
/// S, via the square-free quotient sum: over every l with x_t | x_l and
/// x_l / x_t square free, the product of (f * mu)(x_k) for k != l.
/// The n = 1 minor is the empty determinant, 1.
Rational det_minor_structured(const GcdSet& s, const ArithmeticFn& f, std::size_t t);

/// The t-deleted minor matrix itself (oracle side of the identity above).
ExactMatrix delete_row_col(const ExactMatrix& m, std::size_t t);

}  // namespace gcdmat
