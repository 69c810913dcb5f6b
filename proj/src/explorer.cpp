#include "gcdmat/explorer.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <map>
#include <mutex>
#include <thread>

#include "gcdmat/errors.hpp"

namespace gcdmat {

void EnumConfig::validate() const {
  if (max_element < 1) throw ConfigError("max_element must be >= 1");
  if (max_size < 1) throw ConfigError("max_size must be >= 1");
  if (mode == EnumMode::kDivisorLattice && lattice_root < 1)
    throw ConfigError("divisor-lattice mode needs a positive lattice root");
}

namespace {

// Depth-first enumeration over an ascending universe. `admissible`
// decides whether `candidate` may extend the current set.
void enumerate_closed_subsets(
    const std::vector<Int>& universe, std::size_t max_size,
    const std::function<bool(const std::vector<Int>&, const Int&)>& admissible,
    const std::function<void(const GcdSet&)>& yield) {
  std::vector<Int> current;

  const std::function<void(std::size_t)> dfs = [&](std::size_t next) {
    yield(GcdSet::canonicalize(current));
    if (current.size() >= max_size) return;
    for (std::size_t i = next; i < universe.size(); ++i) {
      if (!admissible(current, universe[i])) continue;
      current.push_back(universe[i]);
      dfs(i + 1);
      current.pop_back();
    }
  };

  for (std::size_t i = 0; i < universe.size(); ++i) {
    if (!admissible(current, universe[i])) continue;
    current.push_back(universe[i]);
    dfs(i + 1);
    current.pop_back();
  }
}

std::vector<Int> full_universe(long max_element) {
  std::vector<Int> u;
  for (long v = 1; v <= max_element; ++v) u.emplace_back(v);
  return u;
}

bool passes_filters(const EnumConfig& cfg, const GcdSet& s) {
  if (cfg.filter_max_gtd && max_gtd(s) != *cfg.filter_max_gtd) return false;
  if (cfg.filter_condition_g) {
    const StructureProfile p = analyze(s);
    if (p.condition_g != *cfg.filter_condition_g) return false;
  }
  return true;
}

}  // namespace

void enumerate_gcd_closed(const EnumConfig& cfg, const std::function<void(const GcdSet&)>& yield) {
  cfg.validate();
  const std::vector<Int> universe = (cfg.mode == EnumMode::kDivisorLattice)
                                        ? divisors(Int(cfg.lattice_root))
                                        : full_universe(cfg.max_element);
  const auto admissible = [](const std::vector<Int>& current, const Int& x) {
    for (const Int& s : current)
      if (!std::binary_search(current.begin(), current.end(), gcd(s, x))) return false;
    return true;
  };
  enumerate_closed_subsets(universe, cfg.max_size, admissible, [&](const GcdSet& s) {
    if (passes_filters(cfg, s)) yield(s);
  });
}

void enumerate_factor_closed(const EnumConfig& cfg,
                             const std::function<void(const GcdSet&)>& yield) {
  cfg.validate();
  const std::vector<Int> universe = full_universe(cfg.max_element);
  const auto admissible = [](const std::vector<Int>& current, const Int& x) {
    for (const Int& d : divisors(x))
      if (d != x && !std::binary_search(current.begin(), current.end(), d)) return false;
    return true;
  };
  enumerate_closed_subsets(universe, cfg.max_size, admissible, [&](const GcdSet& s) {
    if (passes_filters(cfg, s)) yield(s);
  });
}

void enumerate_sets(const EnumConfig& cfg, const std::function<void(const GcdSet&)>& yield) {
  if (cfg.mode == EnumMode::kFactorClosed)
    enumerate_factor_closed(cfg, yield);
  else
    enumerate_gcd_closed(cfg, yield);
}

std::vector<GcdSet> collect_sets(const EnumConfig& cfg) {
  std::vector<GcdSet> sets;
  enumerate_sets(cfg, [&](const GcdSet& s) { sets.push_back(s); });
  return sets;
}

std::string to_string(Severity s) {
  switch (s) {
    case Severity::kInfo:
      return "INFO";
    case Severity::kWarn:
      return "WARN";
    case Severity::kCritical:
      return "CRITICAL";
  }
  throw Error("unreachable");
}

namespace {

struct SetResult {
  int max_gtd = 0;
  bool condition_g = false;
  std::string closure_class;
  std::vector<Finding> findings;
};

std::string closure_class_of(const StructureProfile& p) {
  if (p.divisor_chain) return "divisor-chain";
  if (p.factor_closed) return "factor-closed";
  if (p.gcd_closed) return "gcd-closed";
  return "not-gcd-closed";
}

// Work shared by campaigns and the frontier search. `stratum` selects the
// sets to process; `classify` maps a non-integral decided verdict to a
// severity.
SetResult process_set(const GcdSet& s, const std::vector<PowerPair>& powers,
                      const std::vector<PairKind>& kinds, bool run_checks,
                      const std::function<Severity(bool hypotheses_met)>& classify) {
  SetResult result;
  const StructureProfile profile = analyze(s);
  result.max_gtd = profile.max_gtd;
  result.condition_g = profile.condition_g;
  result.closure_class = closure_class_of(profile);

  for (const PowerPair& p : powers) {
    const bool hypotheses_met =
        profile.gcd_closed && profile.condition_g && profile.max_gtd <= 3 && p.a_divides_b;
    for (PairKind kind : kinds) {
      const DivisibilityReport report = divides(s, p.a, p.b, kind);
      if (report.status == ReportStatus::kSingularDivisor) {
        result.findings.push_back(
            {s, p.a, p.b, to_string(kind), Severity::kWarn, std::nullopt, "singular divisor"});
      } else if (!report.integral) {
        result.findings.push_back({s, p.a, p.b, to_string(kind), classify(hypotheses_met),
                                   report.witness, "non-integral quotient"});
      }
    }
    if (run_checks && p.a_divides_b && profile.gcd_closed) {
      for (const std::string& v : check_single_gtd_divisibility(s, p.a, p.b))
        result.findings.push_back(
            {s, p.a, p.b, "single-gtd-check", Severity::kCritical, std::nullopt, v});
      for (const std::string& v : check_double_gtd_divisibility(s, p.a, p.b).violations)
        result.findings.push_back(
            {s, p.a, p.b, "double-gtd-check", Severity::kCritical, std::nullopt, v});
      if (profile.condition_g) {
        for (const std::string& v : check_triple_gtd_divisibility(s, p.a, p.b))
          result.findings.push_back(
              {s, p.a, p.b, "triple-gtd-check", Severity::kCritical, std::nullopt, v});
      }
    }
  }
  return result;
}

// Maps set index -> result over a thread pool, delivering results to
// `consume` strictly in index order so output is scheduling-independent.
void ordered_parallel_map(const std::vector<GcdSet>& sets, int threads,
                          const std::function<SetResult(const GcdSet&)>& work,
                          const std::function<void(SetResult)>& consume) {
  const std::size_t n = sets.size();
  if (threads <= 1) {
    for (const GcdSet& s : sets) consume(work(s));
    return;
  }

  std::vector<std::optional<SetResult>> results(n);
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::condition_variable cv;

  const auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      SetResult r = work(sets[i]);
      {
        std::lock_guard<std::mutex> lock(mu);
        results[i] = std::move(r);
      }
      cv.notify_all();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);

  {
    std::unique_lock<std::mutex> lock(mu);
    for (std::size_t i = 0; i < n; ++i) {
      cv.wait(lock, [&] { return results[i].has_value(); });
      SetResult r = std::move(*results[i]);
      results[i].reset();
      lock.unlock();
      consume(std::move(r));
      lock.lock();
    }
  }
  for (std::thread& t : pool) t.join();
}

CampaignSummary run_campaign_impl(const std::vector<GcdSet>& sets,
                                  const std::vector<PowerPair>& powers,
                                  const std::vector<PairKind>& kinds, int threads,
                                  const FindingSink& sink) {
  const auto start = std::chrono::steady_clock::now();
  CampaignSummary summary;
  summary.threads = std::max(1, threads);

  std::map<std::tuple<int, bool, std::string>, std::uint64_t> strata;
  const auto work = [&](const GcdSet& s) {
    return process_set(s, powers, kinds, /*run_checks=*/true, [](bool hypotheses_met) {
      return hypotheses_met ? Severity::kCritical : Severity::kInfo;
    });
  };
  const auto consume = [&](SetResult r) {
    ++summary.sets_examined;
    ++strata[{r.max_gtd, r.condition_g, r.closure_class}];
    for (Finding& f : r.findings) {
      if (sink) sink(f);
      switch (f.severity) {
        case Severity::kCritical:
          summary.violations.push_back(std::move(f));
          break;
        case Severity::kWarn:
          ++summary.warn_findings;
          break;
        case Severity::kInfo:
          ++summary.info_findings;
          break;
      }
    }
  };
  ordered_parallel_map(sets, summary.threads, work, consume);

  for (const auto& [key, count] : strata)
    summary.hypothesis_breakdown.push_back(
        {std::get<0>(key), std::get<1>(key), std::get<2>(key), count});
  summary.elapsed_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                            start)
          .count());
  return summary;
}

}  // namespace

CampaignSummary run_campaign(const EnumConfig& cfg, const std::vector<PowerPair>& powers,
                             const std::vector<PairKind>& kinds, int threads,
                             const FindingSink& sink) {
  return run_campaign_impl(collect_sets(cfg), powers, kinds, threads, sink);
}

CampaignSummary run_campaign_on(const std::vector<GcdSet>& sets,
                                const std::vector<PowerPair>& powers,
                                const std::vector<PairKind>& kinds, int threads,
                                const FindingSink& sink) {
  return run_campaign_impl(sets, powers, kinds, threads, sink);
}

std::vector<Finding> search_frontier(const EnumConfig& cfg, const std::vector<PowerPair>& powers,
                                     int threads, const FindingSink& sink) {
  for (const PowerPair& p : powers)
    if (!p.a_divides_b)
      throw ConfigError("frontier search requires a | b for every power pair");

  // The frontier: beyond the proven greatest-type-divisor range, or with
  // the pairwise condition broken.
  std::vector<GcdSet> sets;
  enumerate_gcd_closed(cfg, [&](const GcdSet& s) {
    const StructureProfile p = analyze(s);
    if ((p.max_gtd >= 4 && p.condition_g) || !p.condition_g) sets.push_back(s);
  });

  const std::vector<PairKind> kinds = {PairKind::kGcdGcd, PairKind::kGcdLcm, PairKind::kLcmLcm};
  std::vector<Finding> findings;
  const auto work = [&](const GcdSet& s) {
    // Non-integral on a condition-satisfying set contradicts the open
    // conjecture: maximum severity.
    const StructureProfile p = analyze(s);
    return process_set(s, powers, kinds, /*run_checks=*/false,
                       [&](bool) { return p.condition_g ? Severity::kCritical : Severity::kInfo; });
  };
  const auto consume = [&](SetResult r) {
    for (Finding& f : r.findings) {
      if (sink) sink(f);
      findings.push_back(std::move(f));
    }
  };
  ordered_parallel_map(sets, std::max(1, threads), work, consume);
  return findings;
}

}  // namespace gcdmat
