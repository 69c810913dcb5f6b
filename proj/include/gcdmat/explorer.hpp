#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gcdmat/divisibility_checks.hpp"

namespace gcdmat {

enum class EnumMode { kGcdClosed, kFactorClosed, kDivisorLattice };

/// Enumeration universe and filters. In the gcd-closed and factor-closed
/// modes the universe is {1..max_element}; in the divisor-lattice mode it
/// is the divisor set of lattice_root, which reaches structurally rich
/// sets far beyond what a full scan of the same magnitude could.
struct EnumConfig {
  long max_element = 1;
  std::size_t max_size = kNoSizeLimit;
  EnumMode mode = EnumMode::kGcdClosed;
  long lattice_root = 0;  // required in kDivisorLattice mode
  std::optional<int> filter_max_gtd;        // keep sets whose max |G(x)| equals this
  std::optional<bool> filter_condition_g;   // keep sets with this pairwise-condition status

  static constexpr std::size_t kNoSizeLimit = static_cast<std::size_t>(-1);

  void validate() const;  // throws ConfigError
};

/// Streams every gcd-closed subset of the universe with size <= max_size,
/// each exactly once, in depth-first order that extends sets by strictly
/// larger elements. A candidate is admissible iff its gcd with every
/// present element is already present (that gcd is smaller than the
/// candidate, so it could never be added later).
void enumerate_gcd_closed(const EnumConfig& cfg, const std::function<void(const GcdSet&)>& yield);

/// Streams every factor-closed subset (divisibility downset) of
/// {1..max_element} with size <= max_size, each exactly once.
void enumerate_factor_closed(const EnumConfig& cfg,
                             const std::function<void(const GcdSet&)>& yield);

/// Dispatches on cfg.mode.
void enumerate_sets(const EnumConfig& cfg, const std::function<void(const GcdSet&)>& yield);

std::vector<GcdSet> collect_sets(const EnumConfig& cfg);

struct PowerPair {
  unsigned a = 1;
  unsigned b = 1;
  bool a_divides_b = true;

  static PowerPair of(unsigned a, unsigned b) { return {a, b, b % a == 0}; }
};

enum class Severity { kInfo, kWarn, kCritical };

std::string to_string(Severity s);

/// One observed event: a non-integral verdict, a singular divisor, or a
/// failed internal check. `kind` holds the pair kind for verdict findings
/// and the check name otherwise.
struct Finding {
  GcdSet set;
  unsigned a = 0;
  unsigned b = 0;
  std::string kind;
  Severity severity = Severity::kInfo;
  std::optional<EntryWitness> witness;
  std::string detail;
};

struct StratumCount {
  int max_gtd = 0;
  bool condition_g = false;
  std::string closure_class;
  std::uint64_t count = 0;
};

struct CampaignSummary {
  std::uint64_t sets_examined = 0;
  std::vector<StratumCount> hypothesis_breakdown;
  /// Findings on hypothesis-satisfying sets; must stay empty.
  std::vector<Finding> violations;
  std::uint64_t info_findings = 0;
  std::uint64_t warn_findings = 0;
  std::uint64_t elapsed_ms = 0;
  int threads = 1;
};

using FindingSink = std::function<void(const Finding&)>;

/// Runs the divisibility verdicts and the per-element divisibility checks
/// over every enumerated set. Findings stream through the sink in
/// enumeration order regardless of the worker count, so the reported
/// content depends only on the configuration.
CampaignSummary run_campaign(const EnumConfig& cfg, const std::vector<PowerPair>& powers,
                             const std::vector<PairKind>& kinds, int threads = 1,
                             const FindingSink& sink = {});

/// Same, over an explicit set list (e.g. from a set file). Sets that are
/// not gcd closed get verdicts only; the structural checks need closure.
CampaignSummary run_campaign_on(const std::vector<GcdSet>& sets,
                                const std::vector<PowerPair>& powers,
                                const std::vector<PairKind>& kinds, int threads = 1,
                                const FindingSink& sink = {});

/// Probes the frontier beyond the proven range: only sets with at least
/// four greatest-type divisors somewhere (pairwise condition holding) or
/// with the pairwise condition violated. Every power pair must satisfy
/// a | b. A critical finding here would contradict the open conjecture.
std::vector<Finding> search_frontier(const EnumConfig& cfg, const std::vector<PowerPair>& powers,
                                     int threads = 1, const FindingSink& sink = {});

}  // namespace gcdmat
