#pragma once

#include "gcdmat/coefficients.hpp"
#include "gcdmat/exact_matrix.hpp"

namespace gcdmat {

/// Inverse of the power GCD matrix (S^a) for gcd-closed S, assembled from
/// the coefficient tables: entry (i, j) is the sum over common multiples
/// x_k of x_i and x_j in S of c_{ik} c_{jk} / alpha_{xi_a}(x_k). Must match
/// inverse_oracle(build_gcd_matrix(S, xi_a)) entrywise.
ExactMatrix inverse_gcd_structured(const GcdSet& s, unsigned a);
ExactMatrix inverse_gcd_structured(const GcdSet& s, unsigned a, const CTable& c,
                                   const AlphaTable& alpha);

/// Inverse of the power LCM matrix [S^a] for gcd-closed S with at most
/// three greatest-type divisors per element: entry (i, j) is
/// 1/(x_i^a x_j^a) times the same double-coefficient sum taken against
/// alpha_{1/xi_a}. Throws GtdTooLargeError outside the guaranteed range
/// and AlphaZeroError if a vanishing coefficient is hit anyway.
ExactMatrix inverse_lcm_structured(const GcdSet& s, unsigned a);
ExactMatrix inverse_lcm_structured(const GcdSet& s, unsigned a, const CTable& c,
                                   const AlphaTable& alpha_inv);

}  // namespace gcdmat
