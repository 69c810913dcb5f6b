#include "gcdmat/gcd_set.hpp"

#include <algorithm>
#include <set>

#include "gcdmat/errors.hpp"

namespace gcdmat {

GcdSet GcdSet::canonicalize(std::vector<Int> raw) {
  if (raw.empty()) throw EmptySetError();
  for (const Int& v : raw)
    if (v < 1) throw ParseError("set elements must be positive: '" + v.str() + "'");
  std::sort(raw.begin(), raw.end());
  for (std::size_t i = 1; i < raw.size(); ++i)
    if (raw[i] == raw[i - 1]) throw DuplicateElementError(raw[i].str());
  return GcdSet(std::move(raw));
}

GcdSet GcdSet::parse(std::string_view text) {
  std::vector<Int> raw;
  std::string token;
  const auto flush = [&] {
    if (token.empty()) return;
    for (char c : token)
      if (c < '0' || c > '9') throw ParseError("invalid set element: '" + token + "'");
    raw.push_back(Int(token));
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t' || c == '\r' || c == '\n')
      flush();
    else
      token.push_back(c);
  }
  flush();
  return canonicalize(std::move(raw));
}

bool GcdSet::contains(const Int& v) const {
  return std::binary_search(xs_.begin(), xs_.end(), v);
}

std::optional<std::size_t> GcdSet::index_of(const Int& v) const {
  const auto it = std::lower_bound(xs_.begin(), xs_.end(), v);
  if (it == xs_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - xs_.begin());
}

std::size_t GcdSet::require_index(const Int& v) const {
  const auto idx = index_of(v);
  if (!idx) throw NotInSetError(v.str());
  return *idx;
}

std::string GcdSet::str() const {
  std::string out;
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    if (i) out += ",";
    out += xs_[i].str();
  }
  return out;
}

std::vector<GcdSet> parse_set_file(std::string_view contents) {
  std::vector<GcdSet> sets;
  std::size_t pos = 0;
  while (pos <= contents.size()) {
    const auto nl = contents.find('\n', pos);
    std::string_view line =
        contents.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = (nl == std::string_view::npos) ? contents.size() + 1 : nl + 1;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;
    sets.push_back(GcdSet::parse(line));
  }
  return sets;
}

bool is_gcd_closed(const GcdSet& s) {
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!s.contains(gcd(s[i], s[j]))) return false;
  return true;
}

GcdSet gcd_closure(const GcdSet& s) {
  std::set<Int> closed(s.elements().begin(), s.elements().end());
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Int> snapshot(closed.begin(), closed.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i)
      for (std::size_t j = i + 1; j < snapshot.size(); ++j)
        if (closed.insert(gcd(snapshot[i], snapshot[j])).second) grew = true;
  }
  return GcdSet::canonicalize(std::vector<Int>(closed.begin(), closed.end()));
}

bool is_factor_closed(const GcdSet& s) {
  for (const Int& x : s.elements())
    for (const Int& d : divisors(x))
      if (!s.contains(d)) return false;
  return true;
}

bool is_divisor_chain(const GcdSet& s) {
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i + 1] % s[i] != 0) return false;
  return true;
}

std::vector<Int> greatest_type_divisors(const GcdSet& s, const Int& x) {
  if (!s.contains(x)) throw NotInSetError(x.str());
  std::vector<Int> result;
  for (const Int& d : s.elements()) {
    if (d >= x) break;
    if (x % d != 0) continue;
    bool maximal = true;
    for (const Int& y : s.elements()) {
      if (y <= d) continue;
      if (y >= x) break;
      if (y % d == 0 && x % y == 0) {
        maximal = false;
        break;
      }
    }
    if (maximal) result.push_back(d);
  }
  return result;
}

int max_gtd(const GcdSet& s) {
  std::size_t best = 0;
  for (const Int& x : s.elements())
    best = std::max(best, greatest_type_divisors(s, x).size());
  return static_cast<int>(best);
}

namespace {

// Witnesses against the pairwise condition at a single element, in
// lexicographic pair order. Stops early when first_only is set.
std::vector<ConditionGWitness> scan_element(const GcdSet& s, const Int& x, bool first_only) {
  std::vector<ConditionGWitness> witnesses;
  const std::vector<Int> g = greatest_type_divisors(s, x);
  if (g.size() < 2) return witnesses;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      const Int& y1 = g[i];
      const Int& y2 = g[j];
      std::string clause;
      if (lcm(y1, y2) != x) {
        clause = "lcm(" + y1.str() + "," + y2.str() + ") != " + x.str();
      } else {
        const Int d = gcd(y1, y2);
        const auto in_gtd = [&](const Int& y) {
          const std::vector<Int> gy = greatest_type_divisors(s, y);
          return std::binary_search(gy.begin(), gy.end(), d);
        };
        if (!in_gtd(y1) || !in_gtd(y2))
          clause =
              "gcd(" + y1.str() + "," + y2.str() + ") is not a greatest-type divisor of both";
      }
      if (!clause.empty()) {
        witnesses.push_back({x, y1, y2, std::move(clause)});
        if (first_only) return witnesses;
      }
    }
  }
  return witnesses;
}

// Definitional scan shared by condition_g and analyze; the caller decides
// whether gcd-closure is a precondition.
std::vector<ConditionGWitness> scan_condition_g(const GcdSet& s, bool first_only) {
  std::vector<ConditionGWitness> witnesses;
  for (const Int& x : s.elements()) {
    auto at_x = scan_element(s, x, first_only);
    witnesses.insert(witnesses.end(), std::make_move_iterator(at_x.begin()),
                     std::make_move_iterator(at_x.end()));
    if (first_only && !witnesses.empty()) return witnesses;
  }
  return witnesses;
}

}  // namespace

bool element_satisfies_condition_g(const GcdSet& s, const Int& x) {
  return scan_element(s, x, /*first_only=*/true).empty();
}

ConditionGResult condition_g(const GcdSet& s) {
  if (!is_gcd_closed(s)) throw NotGcdClosedError();
  auto witnesses = scan_condition_g(s, /*first_only=*/true);
  if (witnesses.empty()) return {true, std::nullopt};
  return {false, std::move(witnesses.front())};
}

std::vector<ConditionGWitness> condition_g_violations(const GcdSet& s) {
  if (!is_gcd_closed(s)) throw NotGcdClosedError();
  return scan_condition_g(s, /*first_only=*/false);
}

std::vector<Int> interval_above(const GcdSet& s, const Int& z, const Int& x) {
  if (!s.contains(z)) throw NotInSetError(z.str());
  if (!s.contains(x)) throw NotInSetError(x.str());
  std::vector<Int> result;
  for (const Int& u : s.elements())
    if (u != z && u % z == 0 && x % u == 0) result.push_back(u);
  return result;
}

StructureProfile analyze(const GcdSet& s) {
  StructureProfile p;
  p.gcd_closed = is_gcd_closed(s);
  p.factor_closed = is_factor_closed(s);
  p.divisor_chain = is_divisor_chain(s);
  std::size_t best = 0;
  for (const Int& x : s.elements()) {
    p.gtd.push_back(greatest_type_divisors(s, x));
    best = std::max(best, p.gtd.back().size());
  }
  p.max_gtd = static_cast<int>(best);
  auto witnesses = scan_condition_g(s, /*first_only=*/true);
  p.condition_g = witnesses.empty();
  if (!witnesses.empty()) p.violation_witness = std::move(witnesses.front());
  return p;
}

}  // namespace gcdmat
