#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "djgraph/analysis.hpp"
#include "djgraph/graph.hpp"
#include "djgraph/rational.hpp"

namespace djgraph {

// Closed registry of the statements the verifier can test on an instance.
// Names are stable identifiers used on the command line and in reports.
enum class ClaimId {
  lemma_2_1,
  identity_3,
  corollary_2_2,
  lemma_2_3,
  ineq_LLpd,
  corollary_2_4,
  corollary_2_5,
  theorem_1,
  theorem_1_nonconvex_branch,
  theorem_2,
  theorem_3,
  dj_ge_e_minus_n,
  eq_9,
  ineq_10,
  ineq_11,
  nell_equals_eGprime,
  prune_cardinalities,
  F_removal_monotone,
  conjecture_1,
  conjecture_2,
  conjecture_1_threshold,
};

inline constexpr std::array<ClaimId, 21> kAllClaims = {
    ClaimId::lemma_2_1,
    ClaimId::identity_3,
    ClaimId::corollary_2_2,
    ClaimId::lemma_2_3,
    ClaimId::ineq_LLpd,
    ClaimId::corollary_2_4,
    ClaimId::corollary_2_5,
    ClaimId::theorem_1,
    ClaimId::theorem_1_nonconvex_branch,
    ClaimId::theorem_2,
    ClaimId::theorem_3,
    ClaimId::dj_ge_e_minus_n,
    ClaimId::eq_9,
    ClaimId::ineq_10,
    ClaimId::ineq_11,
    ClaimId::nell_equals_eGprime,
    ClaimId::prune_cardinalities,
    ClaimId::F_removal_monotone,
    ClaimId::conjecture_1,
    ClaimId::conjecture_2,
    ClaimId::conjecture_1_threshold,
};

std::string_view claim_name(ClaimId id);
std::optional<ClaimId> claim_from_name(std::string_view name);

enum class Verdict { holds, violated, not_applicable };

std::string_view verdict_name(Verdict v);

struct Witness {
  std::optional<VertexId> vertex;
  std::optional<Edge> edge;
  std::string note;
};

struct ClaimContext {
  bool locally_convex = false;
  std::int64_t min_degree = 0;
  bool two_e_ge_n = false;
  // Extra named values, in a fixed emission order (exact strings).
  std::vector<std::pair<std::string, std::string>> notes;
};

struct ClaimReport {
  ClaimId claim = ClaimId::lemma_2_1;
  Verdict verdict = Verdict::not_applicable;
  std::optional<BigRat> lhs, rhs;
  std::optional<Witness> witness;
  ClaimContext context;
};

ClaimReport check_claim(const GeometricGraph& g, ClaimId id);

// Checks several claims against one shared analysis of the graph; the
// reports come back in the order requested.
std::vector<ClaimReport> check_claims(const GeometricGraph& g,
                                      std::span<const ClaimId> ids);

// All claims in registry order.
std::vector<ClaimReport> check_all(const GeometricGraph& g);

// Charge assigned to every edge when discharging around vertex v: edges at v
// carry 0, edges beyond an extreme neighbor (set_L or set_R of v) carry 1,
// and any other edge carries one unit per endpoint among the non-extreme
// neighbors of v.  The audit re-derives the expected total
//   sum over w in N(v) minus extremes of (deg w - 1) + |set_L| + |set_R|
// and checks each charged edge is disjoint from the extreme edge its charge
// accounts for (both extreme edges, plus a strictly-inside-the-cone test for
// the endpoints, when the charge is 2).
struct ChargeAssignment {
  std::vector<int> charge;  // aligned with graph.edges()
  std::int64_t total = 0;
  std::int64_t expected = 0;
  bool cases_ok = true;
  std::optional<std::size_t> first_bad_edge;
  std::string note;
};

ChargeAssignment charge_assignment(const GeometricGraph& g, VertexId v);

// Disjoint pair count for chords of a convex polygon given combinatorially:
// vertices are 0..n-1 in cyclic order, and two chords are disjoint iff they
// share no endpoint and do not interleave around the circle.  Independent of
// the coordinate-based count by construction.
std::int64_t convex_chord_oracle(int n, std::span<const Edge> edges);

// Sign of  e - n * (sqrt(1 + 8m) + 3) / 4  computed exactly in integers:
// negative when e is strictly below the bound, zero at equality, positive
// above.  Requires n >= 1, m >= 0 and desk-scale magnitudes (n up to 1e6,
// m up to 1e9, e up to n*(n-1)/2 all stay inside 128-bit intermediates).
int cmp_sqrt_bound(std::int64_t n, std::int64_t e, std::int64_t m);

// Sign of  n - 3m * (sqrt(1 + 8m) - 3) / (2(m - 1))  computed exactly.
// Requires m >= 2.
int cmp_conjecture1_threshold(std::int64_t n, std::int64_t m);

// Exact integer square root when d is a perfect square.
std::optional<std::int64_t> exact_sqrt(std::int64_t d);

}  // namespace djgraph
