#pragma once

// Shared fixture sets. The small ones have hand-checkable structure; the
// divisor lattices exercise elements with three (and four) greatest-type
// divisors, which no subset of {1..24} can reach.

#include <vector>

#include "gcdmat/explorer.hpp"
#include "gcdmat/gcd_set.hpp"

namespace gcdmat::test {

inline GcdSet set_of(std::initializer_list<long> xs) {
  std::vector<Int> v;
  for (long x : xs) v.emplace_back(x);
  return GcdSet::canonicalize(std::move(v));
}

inline GcdSet divisor_set(long n) { return GcdSet::canonicalize(divisors(Int(n))); }

// Gcd closed, pairwise condition holds, max_gtd = 3, not factor closed.
inline GcdSet cube_sixty() { return set_of({1, 3, 4, 5, 12, 15, 20, 60}); }

// Gcd closed, pairwise condition fails at (12, 2, 3).
inline GcdSet violating_twelve() { return set_of({1, 2, 3, 12}); }

// Every gcd-closed set over {1..B} with at most max_size elements.
inline std::vector<GcdSet> gcd_closed_corpus(long max_element, std::size_t max_size) {
  EnumConfig cfg;
  cfg.max_element = max_element;
  cfg.max_size = max_size;
  return collect_sets(cfg);
}

// A compact mixed corpus used by the per-module identity tests.
inline std::vector<GcdSet> fixture_corpus() {
  std::vector<GcdSet> sets = {
      set_of({1}),
      set_of({5}),
      set_of({1, 2}),
      set_of({1, 2, 4}),
      set_of({1, 2, 4, 8, 16}),
      set_of({3, 6, 12, 24}),
      set_of({2, 4, 6}),
      set_of({1, 2, 3, 6}),
      set_of({1, 2, 3, 6, 12}),
      divisor_set(30),
      divisor_set(36),
      divisor_set(60),
      cube_sixty(),
  };
  return sets;
}

}  // namespace gcdmat::test
