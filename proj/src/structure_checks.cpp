#include "gcdmat/structure_checks.hpp"

#include <array>

#include "gcdmat/errors.hpp"

namespace gcdmat {

IntervalLcmScan check_interval_lcm(const GcdSet& s) {
  if (!is_gcd_closed(s)) throw NotGcdClosedError();
  IntervalLcmScan scan;
  for (const Int& x : s.elements()) {
    const std::vector<Int> g = greatest_type_divisors(s, x);
    if (g.size() < 2) continue;
    for (const Int& y : g) {
      for (const Int& z : s.elements()) {
        if (z == x || x % z != 0 || y % z == 0) continue;
        // The interval hypothesis: every u with z | u | x, u != z meets
        // the pairwise condition as an element of S. (Greatest-type
        // divisors taken within the interval alone would falsify the
        // statement, e.g. at x=12, y=3, z=2 in {1,2,3,4,12}.)
        bool hypothesis = true;
        for (const Int& u : interval_above(s, z, x)) {
          if (!element_satisfies_condition_g(s, u)) {
            hypothesis = false;
            break;
          }
        }
        if (!hypothesis) {
          scan.skipped.push_back({x, y, z});
          continue;
        }
        if (lcm(y, z) != x) scan.violations.push_back({x, y, z});
      }
    }
  }
  return scan;
}

namespace {

std::string eq_failure(const std::string& what, const Int& lhs, const Int& rhs) {
  return what + ": " + lhs.str() + " != " + rhs.str();
}

}  // namespace

std::vector<std::string> check_structural_identities(const GcdSet& s) {
  if (!is_gcd_closed(s)) throw NotGcdClosedError();
  if (!condition_g(s).holds) throw ConditionGViolatedError();

  std::vector<std::string> violations;
  constexpr std::array<std::array<int, 3>, 6> kPerms = {
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

  for (const Int& xm : s.elements()) {
    const std::vector<Int> g = greatest_type_divisors(s, xm);
    if (g.size() != 3) continue;
    const Int h = gcd(gcd(g[0], g[1]), g[2]);
    const std::string at = " at x=" + xm.str();

    for (const auto& perm : kPerms) {
      const Int& g1 = g[static_cast<std::size_t>(perm[0])];
      const Int& g2 = g[static_cast<std::size_t>(perm[1])];
      const Int& g3 = g[static_cast<std::size_t>(perm[2])];
      // Product identities; stated multiplicatively to avoid inexact division.
      if (gcd(g1, g2) * xm != g1 * g2)
        violations.push_back(eq_failure("pairwise gcd product" + at, gcd(g1, g2) * xm, g1 * g2));
      if (gcd(g1, g3) * g2 != h * xm)
        violations.push_back(eq_failure("cross gcd transfer" + at, gcd(g1, g3) * g2, h * xm));
      if (gcd(g2, g3) * g1 != h * xm)
        violations.push_back(eq_failure("cross gcd transfer" + at, gcd(g2, g3) * g1, h * xm));
      if (g3 * g1 * g2 != h * xm * xm)
        violations.push_back(eq_failure("triple product" + at, g3 * g1 * g2, h * xm * xm));
    }

    for (std::size_t u = 0; u < 3; ++u)
      for (std::size_t v = u + 1; v < 3; ++v)
        if (h == gcd(g[u], g[v]))
          violations.push_back("triple gcd equals a pairwise gcd" + at);

    // gcd/lcm transfer identities against every other element.
    for (const Int& xl : s.elements()) {
      const Int d = gcd(xl, xm);
      for (const auto& perm : kPerms) {
        const Int& g1 = g[static_cast<std::size_t>(perm[0])];
        const Int& g2 = g[static_cast<std::size_t>(perm[1])];
        const Int& g3 = g[static_cast<std::size_t>(perm[2])];
        if (g1 % d != 0 || d == g1 || g2 % d == 0 || g3 % d == 0) continue;
        const std::string ctx = at + ", l=" + xl.str();
        if (gcd(xl, g3) != gcd(xl, gcd(g1, g3)))
          violations.push_back(eq_failure("gcd transfer" + ctx, gcd(xl, g3), gcd(xl, gcd(g1, g3))));
        if (lcm(xl, xm) != lcm(xl, g2))
          violations.push_back(eq_failure("lcm transfer (top)" + ctx, lcm(xl, xm), lcm(xl, g2)));
        if (lcm(xl, g1) != lcm(xl, gcd(g1, g2)))
          violations.push_back(
              eq_failure("lcm transfer (g1)" + ctx, lcm(xl, g1), lcm(xl, gcd(g1, g2))));
        if (lcm(xl, g3) != lcm(xl, gcd(g2, g3)))
          violations.push_back(
              eq_failure("lcm transfer (g3)" + ctx, lcm(xl, g3), lcm(xl, gcd(g2, g3))));
        if (lcm(xl, gcd(g1, g3)) != lcm(xl, h))
          violations.push_back(
              eq_failure("lcm transfer (bottom)" + ctx, lcm(xl, gcd(g1, g3)), lcm(xl, h)));
      }
    }
  }
  return violations;
}

}  // namespace gcdmat
