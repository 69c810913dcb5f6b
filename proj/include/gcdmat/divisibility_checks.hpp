#pragma once

#include <string>
#include <vector>

#include "gcdmat/divisibility.hpp"
#include "gcdmat/gcd_set.hpp"

namespace gcdmat {

/// The eight-term alternating power sum attached to an element x_m with
/// exactly three greatest-type divisors g1, g2, g3 (pairwise gcds gij,
/// common gcd h):
///   x_m^e - g1^e - g2^e - g3^e + g12^e + g13^e + g23^e - h^e.
Int triple_gtd_alternating_sum(const GcdSet& s, std::size_t m, unsigned e);

/// The same sum with exponent -a (exact rational).
Rational triple_gtd_alternating_sum_inverse(const GcdSet& s, std::size_t m, unsigned a);

/// Divisibility facts around elements with a single greatest-type divisor
/// y: for every z in S, x^a - y^a divides gcd(x,z)^b - gcd(y,z)^b and
/// lcm(x,z)^b - lcm(y,z)^b; and for every r in S dividing x,
/// r^a (y^a - x^a) divides y^a lcm(z,x)^b - x^a lcm(z,y)^b.
/// Requires a gcd-closed set and a | b; expected empty.
std::vector<std::string> check_single_gtd_divisibility(const GcdSet& s, unsigned a, unsigned b);

/// Divisibility facts around elements x with two greatest-type divisors
/// y1, y2 (y3 = gcd(y1, y2)): for every z such that each element of the
/// interval {u in S : gcd(x,z) | u | x} meets the pairwise condition
/// within S, D = x^a + y3^a - y1^a - y2^a divides both four-term power
/// sums, and r^a D divides the mixed sum for every r | x. Pairs failing
/// the interval hypothesis are skipped and logged. Requires gcd-closed
/// and a | b.
struct DoubleGtdScan {
  std::vector<std::string> violations;
  std::vector<std::string> skipped;
};
DoubleGtdScan check_double_gtd_divisibility(const GcdSet& s, unsigned a, unsigned b);

/// Divisibility facts around elements with three greatest-type divisors:
/// the degree-a alternating sum divides the degree-b one; for every
/// x_t | x_m the quotient of the degree-(b-a) sum by
/// x_t^a * (inverse-power sum) is an integer; and both alternating sums
/// factor into the stated three-term products, verified under all six
/// labelings. Requires gcd-closed, the pairwise condition, and a | b.
std::vector<std::string> check_triple_gtd_divisibility(const GcdSet& s, unsigned a, unsigned b);

/// Verdict bundle for one (set, a, b): the three pair kinds decided, plus
/// whether the set meets the divisibility hypotheses (gcd closed, pairwise
/// condition, at most three greatest-type divisors per element, a | b).
/// Under the hypotheses all three verdicts must be integral; otherwise
/// they are informational.
struct DivisibilityValidation {
  bool hypotheses_met = false;
  bool gcd_closed = false;
  bool condition_g = false;
  int max_gtd = 0;
  bool a_divides_b = false;
  std::vector<DivisibilityReport> reports;  // one per pair kind
};

DivisibilityValidation validate_divisibility(const GcdSet& s, unsigned a, unsigned b);

}  // namespace gcdmat
