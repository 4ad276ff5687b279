#include "djgraph/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "djgraph/analysis.hpp"

namespace djgraph {

namespace {

struct InstanceStats {
  std::int64_t n = 0, e = 0, dj_total = 0, m_max = 0;
};

InstanceStats stats_of(const GeometricGraph& g) {
  InstanceStats s{g.n(), g.e(), 0, 0};
  for (std::int64_t c : dj_partner_counts(g)) {
    s.dj_total += c;
    s.m_max = std::max(s.m_max, c);
  }
  s.dj_total /= 2;
  return s;
}

struct InstanceResult {
  InstanceOutcome outcome;
  InstanceStats stats;
  bool violated = false;
};

InstanceResult run_instance(const SearchConfig& cfg,
                            std::span<const ClaimId> claims,
                            std::int64_t index) {
  const std::uint64_t instance_seed =
      derive_seed(cfg.master_seed, static_cast<std::uint64_t>(index));
  Rng rng(instance_seed);
  constexpr int kMaxAttempts = 10000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const int n = static_cast<int>(
        rng.int_in(cfg.n_min, cfg.n_max));
    const Prob p = cfg.p_values[rng.below(cfg.p_values.size())];
    const std::uint64_t graph_seed =
        derive_seed(instance_seed, 1000 + static_cast<std::uint64_t>(attempt));
    GenSpec spec;
    spec.kind = cfg.family;
    spec.n = n;
    spec.p = p;
    spec.seed = graph_seed;
    spec.box = cfg.box;
    GeometricGraph graph = generate(spec);
    if (cfg.min_degree > 0 && graph.min_degree() < cfg.min_degree) continue;

    InstanceResult result{
        InstanceOutcome{index, spec, std::move(graph), {}}, {}, false};
    result.outcome.reports = check_claims(result.outcome.graph, claims);
    result.stats = stats_of(result.outcome.graph);
    for (const ClaimReport& r : result.outcome.reports) {
      if (r.verdict == Verdict::violated) result.violated = true;
    }
    return result;
  }
  throw std::runtime_error(
      "run_search: instance " + std::to_string(index) +
      " never satisfied the min-degree filter after " +
      std::to_string(kMaxAttempts) + " attempts");
}

void atomic_min(std::atomic<std::int64_t>& target, std::int64_t value) {
  std::int64_t current = target.load();
  while (value < current &&
         !target.compare_exchange_weak(current, value)) {
  }
}

}  // namespace

int default_parallelism() {
  if (const char* env = std::getenv("DJGRAPH_PARALLELISM")) {
    const int parsed = std::atoi(env);
    if (parsed >= 1) return parsed;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc >= 1 ? static_cast<int>(hc) : 1;
}

SearchReport run_search(const SearchConfig& config,
                        std::vector<InstanceOutcome>* keep_outcomes) {
  if (config.instances < 1) {
    throw std::invalid_argument("run_search: need at least one instance");
  }
  if (config.n_min < 1 || config.n_min > config.n_max) {
    throw std::invalid_argument("run_search: empty n range");
  }
  if (config.p_values.empty()) {
    throw std::invalid_argument("run_search: no probabilities given");
  }
  if (config.family != "random_convex" && config.family != "random_general") {
    throw std::invalid_argument("run_search: unknown family '" +
                                config.family + "'");
  }
  const std::vector<ClaimId> claims =
      config.claims.empty()
          ? std::vector<ClaimId>(kAllClaims.begin(), kAllClaims.end())
          : config.claims;

  const int workers = std::max(
      1, std::min<int>(config.parallelism > 0 ? config.parallelism
                                              : default_parallelism(),
                       static_cast<int>(std::min<std::int64_t>(
                           config.instances, 1 << 16))));

  std::vector<std::optional<InstanceResult>> results(
      static_cast<std::size_t>(config.instances));
  std::atomic<std::int64_t> next{0};
  // First violating index once known; later indices can be skipped without
  // changing the reported prefix.
  std::atomic<std::int64_t> first_violation{config.instances};
  std::atomic<bool> failed{false};
  std::string failure_message;
  std::mutex failure_mutex;

  const auto worker = [&]() {
    for (;;) {
      const std::int64_t i = next.fetch_add(1);
      if (i >= config.instances) return;
      if (failed.load()) return;
      if (config.stop_on_violation && i > first_violation.load()) continue;
      try {
        InstanceResult r = run_instance(config, claims, i);
        const bool violated = r.violated;
        results[static_cast<std::size_t>(i)] = std::move(r);
        if (violated && config.stop_on_violation) atomic_min(first_violation, i);
      } catch (const std::exception& ex) {
        const std::scoped_lock lock(failure_mutex);
        if (!failed.exchange(true)) failure_message = ex.what();
        return;
      }
    }
  };

  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers) - 1);
    for (int t = 1; t < workers; ++t) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();
  }
  if (failed.load()) throw std::runtime_error(failure_message);

  const std::int64_t covered =
      config.stop_on_violation
          ? std::min<std::int64_t>(first_violation.load() + 1,
                                   config.instances)
          : config.instances;

  SearchReport report;
  report.config = config;
  report.config.claims = claims;
  report.instances_run = covered;
  report.tallies.reserve(claims.size());
  for (ClaimId id : claims) report.tallies.push_back(ClaimTally{id, 0, 0, 0});

  const bool track_c1 =
      std::find(claims.begin(), claims.end(), ClaimId::conjecture_1) !=
      claims.end();
  const bool track_c2 =
      std::find(claims.begin(), claims.end(), ClaimId::conjecture_2) !=
      claims.end();
  std::map<std::int64_t, RatioBucket> ratios;

  for (std::int64_t i = 0; i < covered; ++i) {
    auto& slot = results[static_cast<std::size_t>(i)];
    // Every index up to the first violation was processed: skipping only
    // happens for indices beyond an already recorded violation.
    if (!slot.has_value()) {
      throw std::logic_error("run_search: missing instance " +
                             std::to_string(i));
    }
    InstanceResult& r = *slot;
    for (std::size_t c = 0; c < claims.size(); ++c) {
      const ClaimReport& cr = r.outcome.reports[c];
      switch (cr.verdict) {
        case Verdict::holds: ++report.tallies[c].holds; break;
        case Verdict::violated: ++report.tallies[c].violated; break;
        case Verdict::not_applicable:
          ++report.tallies[c].not_applicable;
          break;
      }
      if (cr.verdict == Verdict::violated) {
        const bool candidate = cr.claim == ClaimId::conjecture_1 ||
                               cr.claim == ClaimId::conjecture_2;
        report.violations.push_back(
            ViolationRecord{i, r.outcome.spec, cr, candidate});
      }
    }
    if (track_c1 && r.stats.n >= 1) {
      const BigRat ratio(BigInt(r.stats.e), BigInt(r.stats.n));
      auto [it, inserted] = ratios.try_emplace(
          r.stats.m_max, RatioBucket{r.stats.m_max, ratio, r.outcome.spec});
      if (!inserted && ratio > it->second.max_e_over_n) {
        it->second.max_e_over_n = ratio;
        it->second.spec = r.outcome.spec;
      }
    }
    if (track_c2 && r.stats.n >= 1 && 2 * r.stats.e >= r.stats.n) {
      const BigRat margin =
          BigRat(r.stats.dj_total) - potential_value(r.stats.n, r.stats.e);
      if (!report.conjecture2_margin ||
          margin < report.conjecture2_margin->margin) {
        report.conjecture2_margin = MarginRecord{margin, r.outcome.spec};
      }
    }
    if (keep_outcomes) keep_outcomes->push_back(std::move(r.outcome));
  }
  for (auto& [m, bucket] : ratios) report.conjecture1_ratios.push_back(bucket);
  return report;
}

}  // namespace djgraph
