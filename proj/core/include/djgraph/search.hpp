#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "djgraph/claims.hpp"
#include "djgraph/generators.hpp"
#include "djgraph/rational.hpp"

namespace djgraph {

struct SearchConfig {
  std::string family = "random_convex";  // random_convex | random_general
  int n_min = 6;
  int n_max = 14;
  std::vector<Prob> p_values = {Prob{1, 2}};
  std::int64_t box = 1'000'000;
  int min_degree = 0;  // instances below this are resampled
  std::int64_t instances = 1;
  std::uint64_t master_seed = 0;
  std::vector<ClaimId> claims;  // empty means the whole registry
  bool stop_on_violation = false;
  // Worker count; 0 picks the environment default.  Execution detail only:
  // it never appears in the report, which is byte-identical at any setting.
  int parallelism = 0;
};

struct ClaimTally {
  ClaimId claim{};
  std::int64_t holds = 0;
  std::int64_t violated = 0;
  std::int64_t not_applicable = 0;
};

struct ViolationRecord {
  std::int64_t instance_index = 0;
  GenSpec spec;
  ClaimReport report;
  // Conjecture hits are leads to audit by hand, not established violations.
  bool candidate_counterexample = false;
};

// Most extreme e/n ratio seen among instances sharing a disjoint-partner
// maximum m (ties keep the earliest instance).
struct RatioBucket {
  std::int64_t m = 0;
  BigRat max_e_over_n;
  GenSpec spec;
};

struct MarginRecord {
  BigRat margin;  // dj_total - potential, minimized
  GenSpec spec;
};

struct SearchReport {
  SearchConfig config;
  std::int64_t instances_run = 0;
  std::vector<ClaimTally> tallies;  // one per requested claim, in order
  std::vector<ViolationRecord> violations;
  std::vector<RatioBucket> conjecture1_ratios;   // when conjecture_1 is run
  std::optional<MarginRecord> conjecture2_margin;  // when conjecture_2 is run
};

// One generated-and-verified instance, exposed for replay tests.
struct InstanceOutcome {
  std::int64_t index = 0;
  GenSpec spec;
  GeometricGraph graph;
  std::vector<ClaimReport> reports;
};

// Deterministic seeded sweep.  Instance i draws its size and probability
// from derive_seed(master_seed, i), generates (resampling if a min-degree
// filter is set), and checks the requested claims.  The report only depends
// on the config fields above, never on scheduling: with stop_on_violation
// the covered prefix is [0, first violating index].  Pass keep_outcomes to
// capture every covered instance (test hook).
SearchReport run_search(const SearchConfig& config,
                        std::vector<InstanceOutcome>* keep_outcomes = nullptr);

// DJGRAPH_PARALLELISM when set to a positive integer, otherwise the hardware
// concurrency (at least 1).
int default_parallelism();

}  // namespace djgraph
