#pragma once

#include <optional>
#include <string>

#include "gcdmat/coefficients.hpp"
#include "gcdmat/exact_matrix.hpp"

namespace gcdmat {

enum class PairKind { kGcdGcd, kGcdLcm, kLcmLcm };

std::string to_string(PairKind kind);
PairKind parse_pair_kind(std::string_view text);  // throws ParseError

enum class ReportStatus { kDecided, kSingularDivisor };

/// 1-based coordinates of the first non-integral quotient entry.
struct EntryWitness {
  Eigen::Index row = 0;
  Eigen::Index col = 0;
  Rational value;
};

/// Outcome of a matrix divisibility decision in M_n(Z).
///
/// Both matrices in every pair are symmetric, so a left integer factor
/// exists iff the right one does (the left quotient is the transpose of
/// the right); deciding via the right quotient alone loses nothing, and
/// the report records that basis.
struct DivisibilityReport {
  GcdSet set;
  unsigned a = 1;
  unsigned b = 1;
  PairKind kind = PairKind::kGcdGcd;
  ReportStatus status = ReportStatus::kSingularDivisor;
  bool integral = false;
  std::optional<EntryWitness> witness;
  ExactMatrix quotient;  // empty when status == kSingularDivisor
};

/// One-sentence decision basis recorded in serialized reports.
inline constexpr const char* kDecisionBasis =
    "right quotient only: divisor and dividend are symmetric, so a left "
    "integer factor exists iff the right one does (transpose)";

/// Exact right quotient dividend * divisor^{-1}; the result times the
/// divisor reproduces the dividend exactly. Throws SingularMatrixError /
/// DimensionMismatchError.
ExactMatrix quotient(const ExactMatrix& dividend, const ExactMatrix& divisor);

/// Decides whether the a-th power matrix of the selected kind divides the
/// b-th power one over the integers. The set may be arbitrary; failure
/// modes are encoded in the report status, never thrown.
DivisibilityReport divides(const GcdSet& s, unsigned a, unsigned b, PairKind kind);

/// Per-entry kernel of the gcd-pair quotient: the sum over x_r | x_m of
/// c_{rm} gcd(x_l, x_r)^b, divided by alpha_{xi_a}(x_m). Integral whenever
/// the divisibility hypotheses hold.
Rational kernel_gcd(const GcdSet& s, unsigned a, unsigned b, std::size_t l, std::size_t m);
Rational kernel_gcd(const GcdSet& s, unsigned b, std::size_t l, std::size_t m, const CTable& c,
                    const AlphaTable& alpha);

/// Same shape with lcm(x_l, x_r)^b in place of the gcd powers.
Rational kernel_lcm(const GcdSet& s, unsigned a, unsigned b, std::size_t l, std::size_t m);
Rational kernel_lcm(const GcdSet& s, unsigned b, std::size_t l, std::size_t m, const CTable& c,
                    const AlphaTable& alpha);

/// Kernel of the lcm-pair quotient: sum over x_r | x_m of
/// c_{rm} lcm(x_l, x_r)^b / x_r^a, divided by x_s^a alpha_{1/xi_a}(x_m).
/// Requires x_s | x_m; throws NotADivisorError / AlphaZeroError.
Rational kernel_lcm_scaled(const GcdSet& s, unsigned a, unsigned b, std::size_t l, std::size_t m,
                           std::size_t sidx);
Rational kernel_lcm_scaled(const GcdSet& s, unsigned a, unsigned b, std::size_t l, std::size_t m,
                           std::size_t sidx, const CTable& c, const AlphaTable& alpha_inv);

/// Assembles the quotient matrix entrywise from kernel sums:
///   gcd-gcd: (l, j) = sum over x_j | x_m of c_{jm} * kernel_gcd(l, m)
///   gcd-lcm: same with kernel_lcm
///   lcm-lcm: (l, s) = sum over x_s | x_m of c_{sm} * kernel_lcm_scaled(l, m, s)
/// Must equal quotient(...) entrywise; this is the deepest cross-check of
/// the structured machinery. Requires a gcd-closed set; the lcm pair
/// additionally requires every alpha_{1/xi_a}(x_m) != 0.
ExactMatrix quotient_via_kernels(const GcdSet& s, unsigned a, unsigned b, PairKind kind);

}  // namespace gcdmat
