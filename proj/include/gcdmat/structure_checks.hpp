#pragma once

#include <string>
#include <vector>

#include "gcdmat/gcd_set.hpp"

namespace gcdmat {

struct IntervalLcmViolation {
  Int x;  // element with at least two greatest-type divisors
  Int y;  // a greatest-type divisor of x
  Int z;  // proper divisor of x in S not dividing y
};

struct IntervalLcmScan {
  std::vector<IntervalLcmViolation> violations;
  /// Triples whose interval hypothesis fails (some element of the
  /// interval breaks the pairwise condition within S); nothing is
  /// concluded for these.
  std::vector<IntervalLcmViolation> skipped;
};

/// Scans every triple (x, y, z) with |G(x)| >= 2, y in G(x), z in S,
/// z | x, z != x, z not dividing y. Whenever every element of the
/// interval {u in S : z | u | x, u != z} meets the pairwise condition as
/// an element of S, lcm(y, z) must recover x; anything else is reported.
/// Expected empty on every input — a violation signals an implementation
/// bug. Requires a gcd-closed set.
IntervalLcmScan check_interval_lcm(const GcdSet& s);

/// For every x_m with exactly three greatest-type divisors g1 < g2 < g3
/// (with h = gcd of all three and gij the pairwise gcds), verifies under
/// all six labelings:
///   gcd(g_i, g_j) * x_m == g_i * g_j,
///   gcd(g1, g3) * g2 == h * x_m   (and its relabelings),
///   g3 * g1 * g2 == h * x_m^2,
///   h != gij for every pair;
/// and, for every x_l whose gcd with x_m divides exactly one labeled gtd
/// properly, the gcd/lcm transfer identities
///   gcd(x_l, g3) == gcd(x_l, g13),     lcm(x_l, x_m) == lcm(x_l, g2),
///   lcm(x_l, g1) == lcm(x_l, g12),     lcm(x_l, g3) == lcm(x_l, g23),
///   lcm(x_l, g13) == lcm(x_l, h).
/// Returns violation descriptions, expected empty. Requires a gcd-closed
/// set passing the pairwise condition.
std::vector<std::string> check_structural_identities(const GcdSet& s);

}  // namespace gcdmat
