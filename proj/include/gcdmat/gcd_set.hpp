#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gcdmat/arith.hpp"

namespace gcdmat {

/// A finite set of distinct positive integers, kept strictly ascending.
/// All verdicts computed downstream are therefore invariant under any
/// reordering of the original input.
class GcdSet {
 public:
  /// Sorts and validates a raw element list.
  /// Throws EmptySetError / DuplicateElementError / ParseError (non-positive).
  static GcdSet canonicalize(std::vector<Int> raw);

  /// Parses a set literal: positive decimal integers separated by
  /// whitespace and/or commas, e.g. "1, 2,3 6".
  static GcdSet parse(std::string_view text);

  std::size_t size() const { return xs_.size(); }
  const Int& operator[](std::size_t k) const { return xs_[k]; }
  const std::vector<Int>& elements() const { return xs_; }
  const Int& min() const { return xs_.front(); }
  const Int& max() const { return xs_.back(); }

  bool contains(const Int& v) const;
  /// Index of v, or nullopt when absent.
  std::optional<std::size_t> index_of(const Int& v) const;
  /// Index of v; throws NotInSetError when absent.
  std::size_t require_index(const Int& v) const;

  bool operator==(const GcdSet& other) const { return xs_ == other.xs_; }
  bool operator<(const GcdSet& other) const { return xs_ < other.xs_; }

  /// Comma-separated rendering, matching the set literal syntax.
  std::string str() const;

 private:
  explicit GcdSet(std::vector<Int> sorted) : xs_(std::move(sorted)) {}
  std::vector<Int> xs_;
};

/// Parses a set file: one set literal per line, blank lines ignored,
/// lines starting with '#' are comments.
std::vector<GcdSet> parse_set_file(std::string_view contents);

bool is_gcd_closed(const GcdSet& s);

/// Smallest gcd-closed superset: iterate pairwise gcds to a fixed point.
GcdSet gcd_closure(const GcdSet& s);

bool is_factor_closed(const GcdSet& s);

/// True iff the ascending elements form a divisibility chain.
bool is_divisor_chain(const GcdSet& s);

/// Greatest-type divisors of x in S: proper divisors d of x in S with no
/// element of S strictly between d and x in the divisibility order.
/// Throws NotInSetError when x is not in S.
std::vector<Int> greatest_type_divisors(const GcdSet& s, const Int& x);

int max_gtd(const GcdSet& s);

/// Witness for a failed pairwise greatest-type-divisor condition: the pair
/// (y1, y2) below x whose lcm misses x or whose gcd is not a greatest-type
/// divisor of both.
struct ConditionGWitness {
  Int x;
  Int y1;
  Int y2;
  std::string clause;  // which clause failed, for diagnostics
};

struct ConditionGResult {
  bool holds = true;
  std::optional<ConditionGWitness> witness;
};

/// Decides the pairwise condition on greatest-type divisors: for every x
/// with |G(x)| >= 2 and every pair y1 != y2 in G(x), lcm(y1, y2) = x and
/// gcd(y1, y2) lies in G(y1) and G(y2). Reports the lexicographically
/// first witness on failure. Requires a gcd-closed set.
ConditionGResult condition_g(const GcdSet& s);

/// All witnesses, in lexicographic order of (x, y1, y2).
std::vector<ConditionGWitness> condition_g_violations(const GcdSet& s);

/// Whether one element meets the pairwise condition within S: either
/// |G(x)| <= 1, or every pair of its greatest-type divisors recovers x as
/// lcm and drops to a common greatest-type divisor as gcd.
bool element_satisfies_condition_g(const GcdSet& s, const Int& x);

/// The set {u in S : z | u | x, u != z}; requires z, x in S. May be empty
/// (exactly when z == x).
std::vector<Int> interval_above(const GcdSet& s, const Int& z, const Int& x);

/// Per-set structural classification.
struct StructureProfile {
  bool gcd_closed = false;
  bool factor_closed = false;
  bool divisor_chain = false;
  std::vector<std::vector<Int>> gtd;  // parallel to the set's elements
  int max_gtd = 0;
  bool condition_g = false;
  std::optional<ConditionGWitness> violation_witness;
};

/// Computes the full profile. The pairwise greatest-type-divisor condition
/// is evaluated by its definitional scan, which is meaningful for any set;
/// the condition_g() entry point above additionally enforces gcd-closure.
StructureProfile analyze(const GcdSet& s);

}  // namespace gcdmat
