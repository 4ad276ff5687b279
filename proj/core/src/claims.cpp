#include "djgraph/claims.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>

namespace djgraph {

namespace {

using int128 = __int128;

constexpr std::array<std::string_view, 21> kClaimNames = {
    "lemma_2_1",
    "identity_3",
    "corollary_2_2",
    "lemma_2_3",
    "ineq_LLpd",
    "corollary_2_4",
    "corollary_2_5",
    "theorem_1",
    "theorem_1_nonconvex_branch",
    "theorem_2",
    "theorem_3",
    "dj_ge_e_minus_n",
    "eq_9",
    "ineq_10",
    "ineq_11",
    "nell_equals_eGprime",
    "prune_cardinalities",
    "F_removal_monotone",
    "conjecture_1",
    "conjecture_2",
    "conjecture_1_threshold",
};

int sign_of(int128 v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }

// Shared, lazily filled analysis state for one graph, so that a multi-claim
// run prices the quadratic and cubic passes once.
class Analysis {
 public:
  explicit Analysis(const GeometricGraph& g)
      : g_(g),
        n_(g.n()),
        e_(g.e()),
        min_degree_(g.min_degree()),
        locally_convex_(is_locally_convex(g)) {}

  const GeometricGraph& graph() const { return g_; }
  std::int64_t n() const { return n_; }
  std::int64_t e() const { return e_; }
  std::int64_t min_degree() const { return min_degree_; }
  bool locally_convex() const { return locally_convex_; }
  bool two_e_ge_n() const { return 2 * e_ >= n_; }

  // Gate shared by the per-vertex counting statements.
  bool counting_applicable() const {
    return locally_convex_ && n_ >= 1 && min_degree_ >= 2;
  }

  const std::vector<std::int64_t>& dj_counts() {
    if (!dj_counts_) {
      dj_counts_ = dj_partner_counts(g_);
      dj_total_ = 0;
      m_max_ = 0;
      for (std::int64_t c : *dj_counts_) {
        dj_total_ += c;
        m_max_ = std::max(m_max_, c);
      }
      dj_total_ /= 2;
    }
    return *dj_counts_;
  }
  std::int64_t dj_total() {
    dj_counts();
    return dj_total_;
  }
  std::int64_t m_max() {
    dj_counts();
    return m_max_;
  }

  const std::vector<VertexLocalData>& local() {
    if (!local_) local_ = all_vertex_local_data(g_);
    return *local_;
  }

  const PruneResult& prune() {
    if (!prune_) prune_ = prune_leftmost(g_);
    return *prune_;
  }

  std::int64_t dj_pruned() {
    if (!dj_pruned_) dj_pruned_ = dj_graph(prune().graph);
    return *dj_pruned_;
  }

  std::int64_t nell() {
    if (!nell_) nell_ = n_ell_pair_count(g_, local());
    return *nell_;
  }

 private:
  const GeometricGraph& g_;
  std::int64_t n_, e_;
  std::int64_t min_degree_;
  bool locally_convex_;

  std::optional<std::vector<std::int64_t>> dj_counts_;
  std::int64_t dj_total_ = 0;
  std::int64_t m_max_ = 0;
  std::optional<std::vector<VertexLocalData>> local_;
  std::optional<PruneResult> prune_;
  std::optional<std::int64_t> dj_pruned_;
  std::optional<std::int64_t> nell_;
};

ClaimReport base_report(ClaimId id, Analysis& a) {
  ClaimReport r;
  r.claim = id;
  r.context.locally_convex = a.locally_convex();
  r.context.min_degree = a.min_degree();
  r.context.two_e_ge_n = a.two_e_ge_n();
  return r;
}

void note(ClaimReport& r, std::string key, std::string value) {
  r.context.notes.emplace_back(std::move(key), std::move(value));
}

void note_int(ClaimReport& r, std::string key, std::int64_t value) {
  note(r, std::move(key), std::to_string(value));
}

ClaimReport not_applicable(ClaimId id, Analysis& a, std::string reason) {
  ClaimReport r = base_report(id, a);
  r.verdict = Verdict::not_applicable;
  note(r, "not_applicable_reason", std::move(reason));
  return r;
}

void set_vertex_witness(ClaimReport& r, VertexId v, std::string note_text) {
  Witness w;
  w.vertex = v;
  w.note = std::move(note_text);
  r.witness = w;
}

void set_edge_witness(ClaimReport& r, Edge e, std::string note_text) {
  Witness w;
  w.edge = e;
  w.note = std::move(note_text);
  r.witness = w;
}

constexpr std::string_view kCountingGateReason =
    "needs a locally convex graph with minimum degree two";

// ---- individual claims ----------------------------------------------------

ClaimReport eval_lemma_2_1(Analysis& a) {
  if (!a.counting_applicable()) {
    return not_applicable(ClaimId::lemma_2_1, a, std::string(kCountingGateReason));
  }
  ClaimReport r = base_report(ClaimId::lemma_2_1, a);
  const auto& local = a.local();
  const GeometricGraph& g = a.graph();
  std::int64_t lhs_sum = 0, rhs_sum = 0;
  for (VertexId v = 0; v < g.n(); ++v) {
    const auto& d = local[static_cast<std::size_t>(v)];
    const std::int64_t lhs_v =
        static_cast<std::int64_t>(d.dj_l.size() + d.dj_r.size());
    std::int64_t rhs_v =
        static_cast<std::int64_t>(d.set_L.size() + d.set_R.size());
    for (VertexId w : g.neighbors(v)) {
      if (w == d.leftmost || w == d.rightmost) continue;
      rhs_v += g.degree(w) - 1;
    }
    lhs_sum += lhs_v;
    rhs_sum += rhs_v;
    if (lhs_v < rhs_v) {
      r.verdict = Verdict::violated;
      set_vertex_witness(r, v,
                         "lower bound fails at this vertex: " +
                             std::to_string(lhs_v) + " < " +
                             std::to_string(rhs_v));
      break;
    }
    const ChargeAssignment charges = charge_assignment(g, v);
    if (charges.total != charges.expected || charges.expected != rhs_v ||
        !charges.cases_ok) {
      r.verdict = Verdict::violated;
      std::string text = "charge audit failed at this vertex: " + charges.note;
      if (charges.first_bad_edge) {
        const Edge bad = g.edge(*charges.first_bad_edge);
        text += " (edge " + std::to_string(bad.u) + "-" +
                std::to_string(bad.v) + ")";
      }
      set_vertex_witness(r, v, std::move(text));
      break;
    }
  }
  if (r.verdict != Verdict::violated) r.verdict = Verdict::holds;
  r.lhs = BigRat(lhs_sum);
  r.rhs = BigRat(rhs_sum);
  return r;
}

ClaimReport eval_identity_3(Analysis& a) {
  if (!a.counting_applicable()) {
    return not_applicable(ClaimId::identity_3, a, std::string(kCountingGateReason));
  }
  ClaimReport r = base_report(ClaimId::identity_3, a);
  std::int64_t sum_l = 0, sum_r = 0;
  for (const auto& d : a.local()) {
    sum_l += d.alpha_l;
    sum_r += d.alpha_r;
  }
  r.lhs = BigRat(sum_l);
  r.rhs = BigRat(a.n());
  note_int(r, "sum_alpha_r", sum_r);
  r.verdict = (sum_l == a.n() && sum_r == a.n()) ? Verdict::holds
                                                 : Verdict::violated;
  return r;
}

ClaimReport eval_corollary_2_2(Analysis& a) {
  if (!a.counting_applicable()) {
    return not_applicable(ClaimId::corollary_2_2, a,
                          std::string(kCountingGateReason));
  }
  ClaimReport r = base_report(ClaimId::corollary_2_2, a);
  std::int64_t lhs = 0;
  std::int64_t deg_sq = 0, alpha_deg = 0, ears = 0;
  for (const auto& d : a.local()) {
    lhs += static_cast<std::int64_t>(d.dj_l.size() + d.dj_r.size());
    deg_sq += static_cast<std::int64_t>(d.degree) * d.degree;
    alpha_deg += static_cast<std::int64_t>(d.alpha_l + d.alpha_r) * d.degree;
    ears += static_cast<std::int64_t>(d.set_L.size() + d.set_R.size());
  }
  const std::int64_t rhs = deg_sq - alpha_deg - 2 * (a.e() - a.n()) + ears;
  r.lhs = BigRat(lhs);
  r.rhs = BigRat(rhs);
  note_int(r, "sum_deg_sq", deg_sq);
  note_int(r, "sum_alpha_times_deg", alpha_deg);
  note_int(r, "sum_setL_setR", ears);
  r.verdict = lhs >= rhs ? Verdict::holds : Verdict::violated;
  return r;
}

ClaimReport eval_lemma_2_3(Analysis& a) {
  if (!a.counting_applicable()) {
    return not_applicable(ClaimId::lemma_2_3, a, std::string(kCountingGateReason));
  }
  ClaimReport r = base_report(ClaimId::lemma_2_3, a);
  std::int64_t lp = 0, rp = 0, pairs_l = 0, pairs_r = 0;
  for (const auto& d : a.local()) {
    lp += static_cast<std::int64_t>(d.set_Lp.size());
    rp += static_cast<std::int64_t>(d.set_Rp.size());
    pairs_l += static_cast<std::int64_t>(d.alpha_l) * (d.alpha_l - 1) / 2;
    pairs_r += static_cast<std::int64_t>(d.alpha_r) * (d.alpha_r - 1) / 2;
  }
  r.lhs = BigRat(lp);
  r.rhs = BigRat(pairs_l);
  note_int(r, "sum_setRp", rp);
  note_int(r, "sum_alpha_r_pairs", pairs_r);
  r.verdict = (lp == pairs_l && rp == pairs_r) ? Verdict::holds
                                               : Verdict::violated;
  return r;
}

ClaimReport eval_ineq_LLpd(Analysis& a) {
  if (!a.counting_applicable()) {
    return not_applicable(ClaimId::ineq_LLpd, a, std::string(kCountingGateReason));
  }
  ClaimReport r = base_report(ClaimId::ineq_LLpd, a);
  std::int64_t lhs = 0, rhs = 0;
  for (const auto& d : a.local()) {
    lhs += static_cast<std::int64_t>(d.set_L.size() + d.set_R.size());
    rhs += static_cast<std::int64_t>(d.set_Lp.size() + d.set_Rp.size()) +
           d.delta_l + d.delta_r;
    const bool ok_l =
        d.set_L.size() >= d.set_Lp.size() + static_cast<std::size_t>(d.delta_l);
    const bool ok_r =
        d.set_R.size() >= d.set_Rp.size() + static_cast<std::size_t>(d.delta_r);
    if (!ok_l || !ok_r) {
      r.verdict = Verdict::violated;
      set_vertex_witness(r, d.vertex, "per-vertex set bound fails");
    }
  }
  r.lhs = BigRat(lhs);
  r.rhs = BigRat(rhs);
  if (r.verdict != Verdict::violated) r.verdict = Verdict::holds;
  return r;
}

ClaimReport eval_corollary_2_4(Analysis& a) {
  if (!a.counting_applicable()) {
    return not_applicable(ClaimId::corollary_2_4, a,
                          std::string(kCountingGateReason));
  }
  std::int64_t n_l = 0, n_r = 0, deltas = 0, lhs = 0;
  for (const auto& d : a.local()) {
    if (d.alpha_l == d.degree) ++n_l;
    if (d.alpha_r == d.degree) ++n_r;
    deltas += d.delta_l + d.delta_r;
    lhs += static_cast<std::int64_t>(d.dj_l.size() + d.dj_r.size());
  }
  if (n_l >= a.n() || n_r >= a.n()) {
    return not_applicable(ClaimId::corollary_2_4, a,
                          "every vertex is an extreme choice of all its "
                          "neighbors; denominators vanish");
  }
  ClaimReport r = base_report(ClaimId::corollary_2_4, a);
  const BigRat excess = BigRat(2 * a.e() - a.n());
  const BigRat rhs = excess * excess / (BigRat(2) * (a.n() - n_l)) +
                     excess * excess / (BigRat(2) * (a.n() - n_r)) - excess +
                     deltas;
  r.lhs = BigRat(lhs);
  r.rhs = rhs;
  note_int(r, "n_l", n_l);
  note_int(r, "n_r", n_r);
  note_int(r, "sum_delta", deltas);
  r.verdict = BigRat(lhs) >= rhs ? Verdict::holds : Verdict::violated;
  return r;
}

ClaimReport eval_corollary_2_5(Analysis& a) {
  if (!a.counting_applicable()) {
    return not_applicable(ClaimId::corollary_2_5, a,
                          std::string(kCountingGateReason));
  }
  ClaimReport r = base_report(ClaimId::corollary_2_5, a);
  const auto& counts = a.dj_counts();
  const GeometricGraph& g = a.graph();
  std::int64_t lhs = 0;
  for (const auto& d : a.local()) {
    const auto el = g.edge_index(d.vertex, d.leftmost);
    const auto er = g.edge_index(d.vertex, d.rightmost);
    assert(el && er);
    lhs += counts[*el] + counts[*er];
  }
  const BigRat d_avg = average_degree(a.n(), a.e());
  const BigRat rhs = BigRat(a.n()) * (d_avg - 1) * (d_avg - 2);
  r.lhs = BigRat(lhs);
  r.rhs = rhs;
  r.verdict = BigRat(lhs) >= rhs ? Verdict::holds : Verdict::violated;
  return r;
}

// Shared helper for the square-root bound e <= n (sqrt(1+8m) + 3) / 4.
void annotate_sqrt_bound(ClaimReport& r, std::int64_t n, std::int64_t e,
                         std::int64_t m) {
  note_int(r, "m", m);
  const int128 a = 4 * int128(e) - 3 * int128(n);
  note(r, "bound_cmp_lhs_sq",
       a <= 0 ? "nonpositive" : int128_str(a * a));
  note(r, "bound_cmp_rhs_sq", int128_str(int128(n) * n * (1 + 8 * m)));
  if (const auto s = exact_sqrt(1 + 8 * m)) {
    note(r, "sqrt_bound", exact_str(BigRat(BigInt(n) * (*s + 3), BigInt(4))));
  } else {
    note(r, "sqrt_bound", "irrational");
  }
}

ClaimReport eval_theorem_1(Analysis& a) {
  if (a.n() < 1) {
    return not_applicable(ClaimId::theorem_1, a, "empty graph");
  }
  ClaimReport r = base_report(ClaimId::theorem_1, a);
  const std::int64_t n = a.n(), e = a.e(), m = a.m_max();
  const std::int64_t linear = n + 3 * m - 1;
  const bool ok = e <= linear || cmp_sqrt_bound(n, e, m) <= 0;
  r.lhs = BigRat(e);
  annotate_sqrt_bound(r, n, e, m);
  note_int(r, "linear_bound", linear);

  // The reported right-hand side is the max of the two branches when it has
  // an exact rational value; otherwise the squared comparison in the notes
  // carries the exact information.
  const auto s = exact_sqrt(1 + 8 * m);
  if (s) {
    const BigRat sqrt_branch(BigInt(n) * (*s + 3), BigInt(4));
    r.rhs = std::max(sqrt_branch, BigRat(linear));
    note(r, "dominant_branch", sqrt_branch >= BigRat(linear) ? "sqrt" : "linear");
  } else {
    // branch comparison: n * sqrt(1+8m) vs n + 12m - 4, both sides exact.
    const int128 lin_side = int128(n) + 12 * int128(m) - 4;
    bool sqrt_dominates;
    if (lin_side < 0) {
      sqrt_dominates = true;
    } else {
      sqrt_dominates =
          int128(n) * n * (1 + 8 * m) >= lin_side * lin_side;
    }
    if (sqrt_dominates) {
      note(r, "dominant_branch", "sqrt");
      note(r, "rhs_exact", "irrational");
    } else {
      note(r, "dominant_branch", "linear");
      r.rhs = BigRat(linear);
    }
  }
  r.verdict = ok ? Verdict::holds : Verdict::violated;
  return r;
}

ClaimReport eval_theorem_1_nonconvex_branch(Analysis& a) {
  const GeometricGraph& g = a.graph();
  VertexId best = -1;
  std::int64_t nonconvex = 0;
  for (VertexId v = 0; v < g.n(); ++v) {
    if (is_convex_vertex(g, v)) continue;
    ++nonconvex;
    if (best < 0 || g.degree(v) < g.degree(best)) best = v;
  }
  if (nonconvex == 0) {
    return not_applicable(ClaimId::theorem_1_nonconvex_branch, a,
                          "every vertex is convex");
  }
  ClaimReport r = base_report(ClaimId::theorem_1_nonconvex_branch, a);
  // Binding instance of "e <= 3 m_max + deg v for every non-convex v" is the
  // non-convex vertex of smallest degree.
  const std::int64_t rhs = 3 * a.m_max() + g.degree(best);
  r.lhs = BigRat(a.e());
  r.rhs = BigRat(rhs);
  note_int(r, "nonconvex_vertices", nonconvex);
  note_int(r, "min_nonconvex_degree", g.degree(best));
  note_int(r, "m", a.m_max());
  if (a.e() <= rhs) {
    r.verdict = Verdict::holds;
  } else {
    r.verdict = Verdict::violated;
    set_vertex_witness(r, best, "non-convex vertex with the binding degree");
  }
  return r;
}

ClaimReport eval_theorem_2(Analysis& a) {
  if (a.n() < 1) return not_applicable(ClaimId::theorem_2, a, "empty graph");
  if (!a.locally_convex()) {
    return not_applicable(ClaimId::theorem_2, a,
                          "needs a locally convex graph");
  }
  if (!a.two_e_ge_n()) {
    return not_applicable(ClaimId::theorem_2, a, "needs 2e >= n");
  }
  ClaimReport r = base_report(ClaimId::theorem_2, a);
  const BigRat rhs = potential_value(a.n(), a.e());
  r.lhs = BigRat(a.dj_total());
  r.rhs = rhs;
  note(r, "avg_degree", exact_str(average_degree(a.n(), a.e())));
  r.verdict = BigRat(a.dj_total()) >= rhs ? Verdict::holds : Verdict::violated;
  return r;
}

ClaimReport eval_theorem_3(Analysis& a) {
  ClaimReport r = base_report(ClaimId::theorem_3, a);
  r.lhs = BigRat(a.e());
  r.rhs = BigRat(a.n());
  if (a.dj_total() > 0) {
    note(r, "dj_total", std::to_string(a.dj_total()));
    note(r, "vacuous", "graph has a disjoint edge pair");
    r.verdict = Verdict::holds;
    return r;
  }
  r.verdict = a.e() <= a.n() ? Verdict::holds : Verdict::violated;
  return r;
}

ClaimReport eval_dj_ge_e_minus_n(Analysis& a) {
  ClaimReport r = base_report(ClaimId::dj_ge_e_minus_n, a);
  r.lhs = BigRat(a.dj_total());
  r.rhs = BigRat(a.e() - a.n());
  r.verdict =
      a.dj_total() >= a.e() - a.n() ? Verdict::holds : Verdict::violated;
  return r;
}

ClaimReport eval_eq_9(Analysis& a) {
  if (!a.counting_applicable()) {
    return not_applicable(ClaimId::eq_9, a, std::string(kCountingGateReason));
  }
  ClaimReport r = base_report(ClaimId::eq_9, a);
  std::int64_t sum_dj_l = 0;
  for (const auto& d : a.local()) {
    sum_dj_l += static_cast<std::int64_t>(d.dj_l.size());
  }
  const std::int64_t rhs = a.dj_pruned() + sum_dj_l - a.nell();
  r.lhs = BigRat(a.dj_total());
  r.rhs = BigRat(rhs);
  note_int(r, "dj_pruned", a.dj_pruned());
  note_int(r, "sum_dj_l", sum_dj_l);
  note_int(r, "n_ell_pairs", a.nell());
  r.verdict = a.dj_total() >= rhs ? Verdict::holds : Verdict::violated;
  return r;
}

ClaimReport eval_ineq_10(Analysis& a) {
  if (!a.counting_applicable()) {
    return not_applicable(ClaimId::ineq_10, a, std::string(kCountingGateReason));
  }
  ClaimReport r = base_report(ClaimId::ineq_10, a);
  std::int64_t sum_delta_l = 0;
  for (const auto& d : a.local()) sum_delta_l += d.delta_l;
  const std::int64_t n_l = a.prune().n_l;
  const std::int64_t t_l = a.prune().t_l;
  r.lhs = BigRat(sum_delta_l + n_l);
  r.rhs = BigRat(2 * t_l);
  note_int(r, "n_l", n_l);
  note_int(r, "t_l", t_l);
  note_int(r, "sum_delta_l", sum_delta_l);
  r.verdict = (sum_delta_l + n_l >= 2 * t_l && 2 * t_l >= n_l)
                  ? Verdict::holds
                  : Verdict::violated;
  return r;
}

ClaimReport eval_ineq_11(Analysis& a) {
  if (!a.counting_applicable()) {
    return not_applicable(ClaimId::ineq_11, a, std::string(kCountingGateReason));
  }
  const PruneResult& pruned = a.prune();
  if (pruned.graph.n() < 1) {
    return not_applicable(ClaimId::ineq_11, a, "pruned graph is empty");
  }
  ClaimReport r = base_report(ClaimId::ineq_11, a);
  const BigRat d_pruned = average_degree(pruned.graph.n(), pruned.graph.e());
  const BigRat step =
      BigRat(2 * a.e() - a.n()) / BigRat(a.n() - pruned.n_l) - 1;
  const BigRat d_minus_2 = average_degree(a.n(), a.e()) - 2;
  r.lhs = d_pruned;
  r.rhs = step;
  note(r, "avg_degree_minus_2", exact_str(d_minus_2));
  note_int(r, "n_l", pruned.n_l);
  r.verdict =
      (d_pruned >= step && step >= d_minus_2) ? Verdict::holds : Verdict::violated;
  return r;
}

ClaimReport eval_nell_equals_eGprime(Analysis& a) {
  if (!a.counting_applicable()) {
    return not_applicable(ClaimId::nell_equals_eGprime, a,
                          std::string(kCountingGateReason));
  }
  ClaimReport r = base_report(ClaimId::nell_equals_eGprime, a);
  const GeometricGraph& g = a.graph();
  const auto& local = a.local();

  std::vector<char> is_leftmost(g.edges().size(), 0);
  std::vector<char> survives(static_cast<std::size_t>(g.n()), 0);
  for (const auto& d : local) {
    const auto ei = g.edge_index(d.vertex, d.leftmost);
    assert(ei);
    is_leftmost[*ei] = 1;
    survives[static_cast<std::size_t>(d.vertex)] = d.alpha_l != d.degree;
  }

  bool pairing_ok = true;
  for (std::size_t i = 0; i < g.edges().size() && pairing_ok; ++i) {
    const Edge edge = g.edge(i);
    const auto eu = g.edge_index(edge.u, local[static_cast<std::size_t>(edge.u)].leftmost);
    const auto ev = g.edge_index(edge.v, local[static_cast<std::size_t>(edge.v)].leftmost);
    bool disjoint = false;
    if (*eu != *ev) {
      const auto [p1, p2] = g.segment(*eu);
      const auto [q1, q2] = g.segment(*ev);
      disjoint = segments_disjoint(p1, p2, q1, q2);
    }
    const bool in_pruned = !is_leftmost[i] &&
                           survives[static_cast<std::size_t>(edge.u)] &&
                           survives[static_cast<std::size_t>(edge.v)];
    if (disjoint != in_pruned) {
      pairing_ok = false;
      set_edge_witness(r, edge,
                       disjoint ? "leftmost edges disjoint but edge is pruned away"
                                : "edge survives pruning but leftmost edges meet");
    }
  }

  const std::int64_t lhs = a.nell();
  const std::int64_t rhs = a.prune().graph.e();
  r.lhs = BigRat(lhs);
  r.rhs = BigRat(rhs);
  note(r, "edgewise_pairing", pairing_ok ? "consistent" : "mismatch");
  r.verdict = (lhs == rhs && pairing_ok) ? Verdict::holds : Verdict::violated;
  return r;
}

ClaimReport eval_prune_cardinalities(Analysis& a) {
  if (!a.counting_applicable()) {
    return not_applicable(ClaimId::prune_cardinalities, a,
                          std::string(kCountingGateReason));
  }
  ClaimReport r = base_report(ClaimId::prune_cardinalities, a);
  const PruneResult& pruned = a.prune();
  r.lhs = BigRat(pruned.graph.e());
  r.rhs = BigRat(a.e() - a.n() + pruned.t_l);
  note_int(r, "pruned_vertices", pruned.graph.n());
  note_int(r, "expected_vertices", a.n() - pruned.n_l);
  note_int(r, "n_l", pruned.n_l);
  note_int(r, "t_l", pruned.t_l);
  r.verdict = (pruned.vertex_count_matches && pruned.edge_count_matches)
                  ? Verdict::holds
                  : Verdict::violated;
  return r;
}

ClaimReport eval_F_removal_monotone(Analysis& a) {
  if (a.n() <= 1 || a.e() <= a.n()) {
    return not_applicable(ClaimId::F_removal_monotone, a,
                          "needs e > n and at least two vertices");
  }
  const GeometricGraph& g = a.graph();
  std::optional<BigRat> best;
  VertexId best_vertex = -1;
  for (VertexId v = 0; v < g.n(); ++v) {
    if (g.degree(v) > 1) continue;
    const BigRat value = potential_value(a.n() - 1, a.e() - g.degree(v));
    if (!best || value < *best) {
      best = value;
      best_vertex = v;
    }
  }
  if (!best) {
    return not_applicable(ClaimId::F_removal_monotone, a,
                          "no vertex of degree at most one");
  }
  ClaimReport r = base_report(ClaimId::F_removal_monotone, a);
  const BigRat before = potential_value(a.n(), a.e());
  r.lhs = *best;
  r.rhs = before;
  if (*best > before) {
    r.verdict = Verdict::holds;
  } else {
    r.verdict = Verdict::violated;
    set_vertex_witness(r, best_vertex,
                       "removing this low-degree vertex does not raise the "
                       "potential");
  }
  return r;
}

ClaimReport eval_conjecture_1(Analysis& a) {
  if (a.n() < 1) return not_applicable(ClaimId::conjecture_1, a, "empty graph");
  ClaimReport r = base_report(ClaimId::conjecture_1, a);
  const std::int64_t n = a.n(), e = a.e(), m = a.m_max();
  r.lhs = BigRat(e);
  annotate_sqrt_bound(r, n, e, m);
  if (const auto s = exact_sqrt(1 + 8 * m)) {
    r.rhs = BigRat(BigInt(n) * (*s + 3), BigInt(4));
  }
  r.verdict =
      cmp_sqrt_bound(n, e, m) <= 0 ? Verdict::holds : Verdict::violated;
  return r;
}

ClaimReport eval_conjecture_2(Analysis& a) {
  if (a.n() < 1) return not_applicable(ClaimId::conjecture_2, a, "empty graph");
  if (!a.two_e_ge_n()) {
    return not_applicable(ClaimId::conjecture_2, a, "needs 2e >= n");
  }
  ClaimReport r = base_report(ClaimId::conjecture_2, a);
  const BigRat rhs = potential_value(a.n(), a.e());
  r.lhs = BigRat(a.dj_total());
  r.rhs = rhs;
  note(r, "avg_degree", exact_str(average_degree(a.n(), a.e())));
  r.verdict = BigRat(a.dj_total()) >= rhs ? Verdict::holds : Verdict::violated;
  return r;
}

ClaimReport eval_conjecture_1_threshold(Analysis& a) {
  if (a.n() < 1) {
    return not_applicable(ClaimId::conjecture_1_threshold, a, "empty graph");
  }
  const std::int64_t m = a.m_max();
  if (m < 2) {
    return not_applicable(ClaimId::conjecture_1_threshold, a,
                          "threshold is undefined for m < 2");
  }
  if (cmp_conjecture1_threshold(a.n(), m) < 0) {
    ClaimReport r = not_applicable(ClaimId::conjecture_1_threshold, a,
                                   "n is below the guarantee threshold");
    note_int(r, "m", m);
    return r;
  }
  // Above the threshold the square-root bound is guaranteed, so a violation
  // here is meaningful.
  ClaimReport r = base_report(ClaimId::conjecture_1_threshold, a);
  const std::int64_t n = a.n(), e = a.e();
  r.lhs = BigRat(e);
  annotate_sqrt_bound(r, n, e, m);
  note(r, "threshold_met", "true");
  if (const auto s = exact_sqrt(1 + 8 * m)) {
    r.rhs = BigRat(BigInt(n) * (*s + 3), BigInt(4));
  }
  r.verdict =
      cmp_sqrt_bound(n, e, m) <= 0 ? Verdict::holds : Verdict::violated;
  return r;
}

ClaimReport eval(Analysis& a, ClaimId id) {
  switch (id) {
    case ClaimId::lemma_2_1: return eval_lemma_2_1(a);
    case ClaimId::identity_3: return eval_identity_3(a);
    case ClaimId::corollary_2_2: return eval_corollary_2_2(a);
    case ClaimId::lemma_2_3: return eval_lemma_2_3(a);
    case ClaimId::ineq_LLpd: return eval_ineq_LLpd(a);
    case ClaimId::corollary_2_4: return eval_corollary_2_4(a);
    case ClaimId::corollary_2_5: return eval_corollary_2_5(a);
    case ClaimId::theorem_1: return eval_theorem_1(a);
    case ClaimId::theorem_1_nonconvex_branch:
      return eval_theorem_1_nonconvex_branch(a);
    case ClaimId::theorem_2: return eval_theorem_2(a);
    case ClaimId::theorem_3: return eval_theorem_3(a);
    case ClaimId::dj_ge_e_minus_n: return eval_dj_ge_e_minus_n(a);
    case ClaimId::eq_9: return eval_eq_9(a);
    case ClaimId::ineq_10: return eval_ineq_10(a);
    case ClaimId::ineq_11: return eval_ineq_11(a);
    case ClaimId::nell_equals_eGprime: return eval_nell_equals_eGprime(a);
    case ClaimId::prune_cardinalities: return eval_prune_cardinalities(a);
    case ClaimId::F_removal_monotone: return eval_F_removal_monotone(a);
    case ClaimId::conjecture_1: return eval_conjecture_1(a);
    case ClaimId::conjecture_2: return eval_conjecture_2(a);
    case ClaimId::conjecture_1_threshold:
      return eval_conjecture_1_threshold(a);
  }
  throw PreconditionError("check_claim: unknown claim id");
}

}  // namespace

std::string_view claim_name(ClaimId id) {
  return kClaimNames[static_cast<std::size_t>(id)];
}

std::optional<ClaimId> claim_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kClaimNames.size(); ++i) {
    if (kClaimNames[i] == name) return static_cast<ClaimId>(i);
  }
  return std::nullopt;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::violated: return "violated";
    case Verdict::not_applicable: return "not_applicable";
  }
  return "";
}

ClaimReport check_claim(const GeometricGraph& g, ClaimId id) {
  Analysis a(g);
  return eval(a, id);
}

std::vector<ClaimReport> check_claims(const GeometricGraph& g,
                                      std::span<const ClaimId> ids) {
  Analysis a(g);
  std::vector<ClaimReport> out;
  out.reserve(ids.size());
  for (ClaimId id : ids) out.push_back(eval(a, id));
  return out;
}

std::vector<ClaimReport> check_all(const GeometricGraph& g) {
  return check_claims(g, kAllClaims);
}

ChargeAssignment charge_assignment(const GeometricGraph& g, VertexId v) {
  if (v < 0 || v >= g.n()) {
    throw PreconditionError("charge_assignment: vertex " + std::to_string(v) +
                            " out of range");
  }
  if (!is_locally_convex(g) || g.min_degree() < 2) {
    throw PreconditionError(
        "charge_assignment: needs a locally convex graph with minimum degree "
        "two");
  }
  const VertexLocalData d = vertex_local_data(g, v);
  const Point pv = g.position(v);
  const Point pl = g.position(d.leftmost);
  const Point pr = g.position(d.rightmost);

  std::vector<char> is_neighbor(static_cast<std::size_t>(g.n()), 0);
  for (VertexId w : g.neighbors(v)) is_neighbor[static_cast<std::size_t>(w)] = 1;
  const auto counts_toward_charge = [&](VertexId w) {
    return is_neighbor[static_cast<std::size_t>(w)] && w != d.leftmost &&
           w != d.rightmost;
  };
  const auto strictly_inside_cone = [&](VertexId w) {
    const Point pw = g.position(w);
    return angle_sign(pr, pv, pw) == Sign::positive &&
           angle_sign(pw, pv, pl) == Sign::positive;
  };

  ChargeAssignment result;
  result.charge.assign(g.edges().size(), 0);
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge edge = g.edge(i);
    if (edge.u == v || edge.v == v) continue;
    const bool in_L = std::binary_search(d.set_L.begin(), d.set_L.end(), i);
    const bool in_R = std::binary_search(d.set_R.begin(), d.set_R.end(), i);
    const auto [p1, p2] = g.segment(i);
    const bool dj_left = segments_disjoint(p1, p2, pv, pl);
    const bool dj_right = segments_disjoint(p1, p2, pv, pr);
    int charge = 0;
    bool ok = true;
    if (in_L || in_R) {
      charge = 1;
      // An edge past the leftmost neighbor avoids the rightmost extreme edge
      // and vice versa.
      ok = (in_L && dj_right) || (in_R && dj_left);
    } else {
      charge = (counts_toward_charge(edge.u) ? 1 : 0) +
               (counts_toward_charge(edge.v) ? 1 : 0);
      if (charge == 1) {
        ok = dj_left || dj_right;
      } else if (charge == 2) {
        ok = dj_left && dj_right && strictly_inside_cone(edge.u) &&
             strictly_inside_cone(edge.v);
      }
    }
    result.charge[i] = charge;
    result.total += charge;
    if (charge > 0 && !ok && result.cases_ok) {
      result.cases_ok = false;
      result.first_bad_edge = i;
      result.note = "charged edge misses its disjointness obligation";
    }
  }

  result.expected =
      static_cast<std::int64_t>(d.set_L.size() + d.set_R.size());
  for (VertexId w : g.neighbors(v)) {
    if (w == d.leftmost || w == d.rightmost) continue;
    result.expected += g.degree(w) - 1;
  }
  if (result.note.empty() && result.total != result.expected) {
    result.note = "charge total " + std::to_string(result.total) +
                  " differs from expected " + std::to_string(result.expected);
  }
  return result;
}

std::int64_t convex_chord_oracle(int n, std::span<const Edge> edges) {
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u == e.v) {
      throw PreconditionError("convex_chord_oracle: chord (" +
                              std::to_string(e.u) + ", " +
                              std::to_string(e.v) + ") is invalid for n = " +
                              std::to_string(n));
    }
  }
  const auto strictly_between = [](VertexId lo, VertexId hi, VertexId x) {
    return lo < x && x < hi;
  };
  std::int64_t total = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge a = Edge::normalized(edges[i].u, edges[i].v);
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge b = Edge::normalized(edges[j].u, edges[j].v);
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) continue;
      const bool cross = strictly_between(a.u, a.v, b.u) !=
                         strictly_between(a.u, a.v, b.v);
      if (!cross) ++total;
    }
  }
  return total;
}

int cmp_sqrt_bound(std::int64_t n, std::int64_t e, std::int64_t m) {
  constexpr std::int64_t kMaxN = 1'000'000'000;
  constexpr std::int64_t kMaxBig = 1'000'000'000'000'000'000;
  if (n < 1 || n > kMaxN || m < 0 || m > kMaxBig || e < 0 || e > kMaxBig) {
    throw PreconditionError("cmp_sqrt_bound: arguments out of supported range");
  }
  const int128 a = 4 * int128(e) - 3 * int128(n);
  if (a <= 0) return -1;  // the bound side n*sqrt(1+8m) is at least n >= 1
  const int128 lhs = a * a;
  const int128 rhs = int128(n) * n * (1 + 8 * int128(m));
  return sign_of(lhs - rhs);
}

int cmp_conjecture1_threshold(std::int64_t n, std::int64_t m) {
  constexpr std::int64_t kMax = 1'000'000'000;
  if (m < 2 || m > kMax || n < 0 || n > kMax) {
    throw PreconditionError(
        "cmp_conjecture1_threshold: arguments out of supported range");
  }
  const int128 a = 2 * int128(n) * (m - 1) + 9 * int128(m);
  const int128 lhs = a * a;
  const int128 rhs = 9 * int128(m) * m * (1 + 8 * int128(m));
  return sign_of(lhs - rhs);
}

std::optional<std::int64_t> exact_sqrt(std::int64_t d) {
  if (d < 0) return std::nullopt;
  auto s = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(d))));
  for (std::int64_t c = std::max<std::int64_t>(0, s - 2); c <= s + 2; ++c) {
    if (int128(c) * c == d) return c;
  }
  return std::nullopt;
}

}  // namespace djgraph
