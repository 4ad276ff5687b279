#include "djgraph/analysis.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <string>

namespace djgraph {

namespace {

std::vector<Point> neighbor_positions(const GeometricGraph& g, VertexId v) {
  std::vector<Point> out;
  out.reserve(g.neighbors(v).size());
  for (VertexId w : g.neighbors(v)) out.push_back(g.position(w));
  return out;
}

// Extreme neighbors for a vertex of a locally convex graph, skipping the
// convexity re-check.  The wide angular gap exists exactly when the vertex is
// convex, so a missing gap here would contradict the caller's gate.
ExtremeNeighbors extremes_unchecked(const GeometricGraph& g, VertexId v) {
  const std::vector<Point> dirs = neighbor_positions(g, v);
  const auto gap = widest_gap_extremes(g.position(v), dirs);
  assert(gap.has_value());
  if (!gap) {
    throw NotApplicableError("extreme_neighbors: vertex " + std::to_string(v) +
                             " has no angular gap wider than a half turn");
  }
  ExtremeNeighbors result{-1, -1};
  const auto span = g.neighbors(v);
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    if (dirs[i] == gap->last) result.leftmost = span[i];
    if (dirs[i] == gap->first) result.rightmost = span[i];
  }
  assert(result.leftmost >= 0 && result.rightmost >= 0);
  return result;
}

// Memoizing provider of extreme neighbors across one analysis pass.
class ExtremeTable {
 public:
  explicit ExtremeTable(const GeometricGraph& g)
      : g_(g), memo_(static_cast<std::size_t>(g.n())) {}

  const ExtremeNeighbors& operator()(VertexId v) {
    auto& slot = memo_[static_cast<std::size_t>(v)];
    if (!slot) slot = extremes_unchecked(g_, v);
    return *slot;
  }

 private:
  const GeometricGraph& g_;
  std::vector<std::optional<ExtremeNeighbors>> memo_;
};

VertexLocalData build_local(const GeometricGraph& g, VertexId v,
                            ExtremeTable& extremes) {
  VertexLocalData d;
  d.vertex = v;
  d.degree = g.degree(v);
  d.is_convex = true;

  const ExtremeNeighbors ext = extremes(v);
  d.leftmost = ext.leftmost;
  d.rightmost = ext.rightmost;

  const Point pv = g.position(v);
  const Point pl = g.position(d.leftmost);
  const Point pr = g.position(d.rightmost);

  for (VertexId w : g.neighbors(v)) {
    if (extremes(w).leftmost == v) ++d.alpha_l;
    if (extremes(w).rightmost == v) ++d.alpha_r;
  }
  d.beta_l = d.alpha_l == d.degree ? 1 : 0;
  d.beta_r = d.alpha_r == d.degree ? 1 : 0;

  // Edges hanging off the extreme neighbors on the far side of the extreme
  // edges.  Incident edge lists are ascending, so the sets stay sorted.
  for (std::size_t ei : g.incident_edges(d.leftmost)) {
    const Edge e = g.edge(ei);
    const VertexId x = e.u == d.leftmost ? e.v : e.u;
    if (x == v) continue;
    if (angle_sign(g.position(x), pl, pv) == Sign::positive) {
      d.set_L.push_back(ei);
      if (extremes(x).leftmost == d.leftmost) d.set_Lp.push_back(ei);
    }
  }
  for (std::size_t ei : g.incident_edges(d.rightmost)) {
    const Edge e = g.edge(ei);
    const VertexId x = e.u == d.rightmost ? e.v : e.u;
    if (x == v) continue;
    if (angle_sign(g.position(x), pr, pv) == Sign::negative) {
      d.set_R.push_back(ei);
      if (extremes(x).rightmost == d.rightmost) d.set_Rp.push_back(ei);
    }
  }
  d.delta_l = d.set_L.size() > d.set_Lp.size() ? 1 : 0;
  d.delta_r = d.set_R.size() > d.set_Rp.size() ? 1 : 0;

  // Edges incident to the neighborhood and disjoint from an extreme edge.
  // Edges touching v or the extreme neighbor drop out on their own because
  // they share an endpoint with the extreme edge.
  for (VertexId u : g.neighbors(v)) {
    for (std::size_t ei : g.incident_edges(u)) {
      const auto [a, b] = g.segment(ei);
      if (segments_disjoint(a, b, pv, pl)) d.dj_l.push_back(ei);
      if (segments_disjoint(a, b, pv, pr)) d.dj_r.push_back(ei);
    }
  }
  for (auto* set : {&d.dj_l, &d.dj_r}) {
    std::sort(set->begin(), set->end());
    set->erase(std::unique(set->begin(), set->end()), set->end());
  }
  return d;
}

}  // namespace

bool is_convex_vertex(const GeometricGraph& g, VertexId v) {
  if (v < 0 || v >= g.n()) {
    throw PreconditionError("is_convex_vertex: vertex " + std::to_string(v) +
                            " out of range");
  }
  if (g.degree(v) == 0) return true;
  const std::vector<Point> hood = neighbor_positions(g, v);
  return !point_in_convex_hull(g.position(v), hood);
}

bool is_locally_convex(const GeometricGraph& g) {
  for (VertexId v = 0; v < g.n(); ++v) {
    if (!is_convex_vertex(g, v)) return false;
  }
  return true;
}

ExtremeNeighbors extreme_neighbors(const GeometricGraph& g, VertexId v) {
  if (v < 0 || v >= g.n()) {
    throw PreconditionError("extreme_neighbors: vertex " + std::to_string(v) +
                            " out of range");
  }
  if (g.degree(v) == 0) {
    throw NotApplicableError("extreme_neighbors: vertex " + std::to_string(v) +
                             " is isolated");
  }
  if (!is_convex_vertex(g, v)) {
    throw NotApplicableError("extreme_neighbors: vertex " + std::to_string(v) +
                             " is not convex");
  }
  return extremes_unchecked(g, v);
}

VertexLocalData vertex_local_data(const GeometricGraph& g, VertexId v) {
  if (v < 0 || v >= g.n()) {
    throw PreconditionError("vertex_local_data: vertex " + std::to_string(v) +
                            " out of range");
  }
  if (!is_locally_convex(g)) {
    throw NotApplicableError(
        "vertex_local_data: graph is not locally convex");
  }
  if (g.degree(v) == 0) {
    throw NotApplicableError("vertex_local_data: vertex " + std::to_string(v) +
                             " is isolated");
  }
  ExtremeTable extremes(g);
  return build_local(g, v, extremes);
}

std::vector<VertexLocalData> all_vertex_local_data(const GeometricGraph& g) {
  if (!is_locally_convex(g)) {
    throw NotApplicableError(
        "all_vertex_local_data: graph is not locally convex");
  }
  if (g.n() > 0 && g.min_degree() < 1) {
    throw NotApplicableError(
        "all_vertex_local_data: graph has an isolated vertex");
  }
  ExtremeTable extremes(g);
  std::vector<VertexLocalData> out;
  out.reserve(static_cast<std::size_t>(g.n()));
  for (VertexId v = 0; v < g.n(); ++v) {
    out.push_back(build_local(g, v, extremes));
  }
  return out;
}

std::vector<std::size_t> dj_edge(const GeometricGraph& g, VertexId u,
                                 VertexId v) {
  const auto self = g.edge_index(u, v);
  if (!self) {
    throw UnknownEdgeError("dj_edge: (" + std::to_string(u) + ", " +
                           std::to_string(v) + ") is not an edge");
  }
  const auto [a, b] = g.segment(*self);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const auto [c, d] = g.segment(i);
    if (segments_disjoint(a, b, c, d)) out.push_back(i);
  }
  return out;
}

std::int64_t dj_graph(const GeometricGraph& g) {
  std::int64_t total = 0;
  const std::size_t e = g.edges().size();
  for (std::size_t i = 0; i < e; ++i) {
    const auto [a, b] = g.segment(i);
    for (std::size_t j = i + 1; j < e; ++j) {
      const auto [c, d] = g.segment(j);
      if (segments_disjoint(a, b, c, d)) ++total;
    }
  }
  return total;
}

std::vector<std::int64_t> dj_partner_counts(const GeometricGraph& g) {
  const std::size_t e = g.edges().size();
  std::vector<std::int64_t> counts(e, 0);
  for (std::size_t i = 0; i < e; ++i) {
    const auto [a, b] = g.segment(i);
    for (std::size_t j = i + 1; j < e; ++j) {
      const auto [c, d] = g.segment(j);
      if (segments_disjoint(a, b, c, d)) {
        ++counts[i];
        ++counts[j];
      }
    }
  }
  return counts;
}

BigRat average_degree(std::int64_t n, std::int64_t e) {
  if (n < 1) throw PreconditionError("average_degree: n must be positive");
  return BigRat(BigInt(2) * e, BigInt(n));
}

BigRat potential_value(std::int64_t n, std::int64_t e) {
  if (n < 1) throw PreconditionError("potential_value: n must be positive");
  return BigRat(BigInt(n), BigInt(2)) * generalized_binom3(average_degree(n, e));
}

std::int64_t n_ell_pair_count(const GeometricGraph& g,
                              std::span<const VertexLocalData> local) {
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (const Edge& edge : g.edges()) {
    const auto lu = static_cast<std::size_t>(local[static_cast<std::size_t>(edge.u)].leftmost);
    const auto lv = static_cast<std::size_t>(local[static_cast<std::size_t>(edge.v)].leftmost);
    const auto eu = g.edge_index(edge.u, static_cast<VertexId>(lu));
    const auto ev = g.edge_index(edge.v, static_cast<VertexId>(lv));
    assert(eu && ev);
    if (*eu == *ev) continue;
    const auto [a, b] = g.segment(*eu);
    const auto [c, d] = g.segment(*ev);
    if (segments_disjoint(a, b, c, d)) {
      pairs.insert(std::minmax(*eu, *ev));
    }
  }
  return static_cast<std::int64_t>(pairs.size());
}

GraphAggregates aggregates(const GeometricGraph& g) {
  GraphAggregates a;
  a.n = g.n();
  a.e = g.e();
  a.dj_per_edge = dj_partner_counts(g);
  std::int64_t doubled = 0;
  for (std::int64_t c : a.dj_per_edge) {
    doubled += c;
    a.m_max = std::max(a.m_max, c);
  }
  a.dj_total = doubled / 2;

  if (a.n >= 1) {
    a.avg_degree = average_degree(a.n, a.e);
    if (g.min_degree() >= 1 && is_locally_convex(g)) {
      const auto local = all_vertex_local_data(g);
      std::int64_t n_l = 0, n_r = 0;
      for (const auto& d : local) {
        if (d.alpha_l == d.degree) ++n_l;
        if (d.alpha_r == d.degree) ++n_r;
      }
      std::int64_t t_l = 0, t_r = 0;
      for (const Edge& edge : g.edges()) {
        const auto& du = local[static_cast<std::size_t>(edge.u)];
        const auto& dv = local[static_cast<std::size_t>(edge.v)];
        if (du.leftmost == edge.v && dv.leftmost == edge.u) ++t_l;
        if (du.rightmost == edge.v && dv.rightmost == edge.u) ++t_r;
      }
      a.n_l = n_l;
      a.n_r = n_r;
      a.t_l = t_l;
      a.t_r = t_r;
      a.n_ell_pairs = n_ell_pair_count(g, local);
      a.potential = potential_value(a.n, a.e);
    }
  }
  return a;
}

PruneResult prune_leftmost(const GeometricGraph& g) {
  if (!is_locally_convex(g) || g.n() == 0 || g.min_degree() < 2) {
    throw PreconditionError(
        "prune_leftmost: needs a locally convex graph with minimum degree two");
  }
  ExtremeTable extremes(g);
  const std::size_t e = g.edges().size();
  std::vector<char> is_leftmost(e, 0);
  std::vector<int> alpha_l(static_cast<std::size_t>(g.n()), 0);
  for (VertexId v = 0; v < g.n(); ++v) {
    const VertexId lv = extremes(v).leftmost;
    const auto ei = g.edge_index(v, lv);
    assert(ei);
    is_leftmost[*ei] = 1;
    ++alpha_l[static_cast<std::size_t>(lv)];
  }
  std::int64_t t_l = 0;
  for (const Edge& edge : g.edges()) {
    if (extremes(edge.u).leftmost == edge.v &&
        extremes(edge.v).leftmost == edge.u) {
      ++t_l;
    }
  }

  std::vector<VertexId> remap(static_cast<std::size_t>(g.n()), -1);
  PruneResult result{
      // Placeholder; the real graph is constructed below once the surviving
      // vertex set is known.
      GeometricGraph({}, {}), {}, 0, t_l, false, false};
  std::vector<Point> new_points;
  for (VertexId v = 0; v < g.n(); ++v) {
    if (alpha_l[static_cast<std::size_t>(v)] == g.degree(v)) {
      ++result.n_l;
      continue;
    }
    remap[static_cast<std::size_t>(v)] = static_cast<VertexId>(new_points.size());
    new_points.push_back(g.position(v));
    result.original_vertex.push_back(v);
  }
  std::vector<std::pair<VertexId, VertexId>> new_edges;
  for (std::size_t i = 0; i < e; ++i) {
    if (is_leftmost[i]) continue;
    const Edge& edge = g.edges()[i];
    const VertexId nu = remap[static_cast<std::size_t>(edge.u)];
    const VertexId nv = remap[static_cast<std::size_t>(edge.v)];
    // Every edge at a deleted vertex is somebody's leftmost edge, so a
    // surviving edge always has surviving endpoints.
    assert(nu >= 0 && nv >= 0);
    new_edges.emplace_back(nu, nv);
  }
  result.graph = GeometricGraph(std::move(new_points), new_edges);
  result.vertex_count_matches =
      result.graph.n() == g.n() - result.n_l;
  result.edge_count_matches =
      result.graph.e() == g.e() - g.n() + result.t_l;
  return result;
}

}  // namespace djgraph
