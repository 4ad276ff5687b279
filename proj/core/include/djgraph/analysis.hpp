#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "djgraph/graph.hpp"
#include "djgraph/rational.hpp"

namespace djgraph {

// Requested quantity is undefined for this graph (wrong degree regime or a
// non-convex vertex in the way).
struct NotApplicableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Caller violated an operation precondition.
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownEdgeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A vertex is convex when it lies strictly outside the closed convex hull of
// its neighbors; vertices of degree zero, one, or two are always convex under
// general position.
bool is_convex_vertex(const GeometricGraph& g, VertexId v);

// True iff every vertex of the graph is convex.
bool is_locally_convex(const GeometricGraph& g);

struct ExtremeNeighbors {
  VertexId leftmost;   // counterclockwise-most neighbor of v
  VertexId rightmost;  // clockwise-most neighbor of v
};

// For a convex vertex, the two neighbors bracketing the angular cone spanned
// by all edges at v: the rightmost comes first after the wide angular gap,
// the leftmost is last before it.  For degree one both coincide with the
// single neighbor.  Throws NotApplicableError when v is isolated or not
// convex.
ExtremeNeighbors extreme_neighbors(const GeometricGraph& g, VertexId v);

// Everything the per-vertex counting arguments consume.  Edge sets are stored
// as ascending indices into graph.edges().
//
//   set_L:  edges (leftmost, x) lying strictly beyond the leftmost edge, i.e.
//           with angle_sign(x, leftmost, v) positive.
//   set_Lp: the subset of set_L whose other endpoint x has the same leftmost
//           neighbor as v.
//   dj_l:   edges incident to a neighbor of v and disjoint from the segment
//           v-leftmost.
//   alpha_l: how many neighbors w of v chose v as their leftmost neighbor.
//   beta_l:  1 iff alpha_l equals the degree of v.
//   delta_l: 1 iff set_L contains an edge outside set_Lp.
// The r-side mirrors all of the above through the rightmost neighbor with the
// opposite angle sign.
struct VertexLocalData {
  VertexId vertex = 0;
  int degree = 0;
  bool is_convex = false;

  VertexId leftmost = -1;
  VertexId rightmost = -1;
  int alpha_l = 0, alpha_r = 0;
  int delta_l = 0, delta_r = 0;
  int beta_l = 0, beta_r = 0;
  std::vector<std::size_t> set_L, set_R, set_Lp, set_Rp;
  std::vector<std::size_t> dj_l, dj_r;
};

// Per-vertex data for one vertex.  Requires the whole graph to be locally
// convex and v to have degree at least one; throws NotApplicableError
// otherwise.
VertexLocalData vertex_local_data(const GeometricGraph& g, VertexId v);

// Data for every vertex of a locally convex graph with minimum degree one.
std::vector<VertexLocalData> all_vertex_local_data(const GeometricGraph& g);

// Indices of the edges disjoint from edge (u, v), ascending.  The result
// never contains (u, v) itself or any edge sharing an endpoint with it.
// Throws UnknownEdgeError when (u, v) is not an edge of the graph.
std::vector<std::size_t> dj_edge(const GeometricGraph& g, VertexId u,
                                 VertexId v);

// Number of unordered pairs of pairwise disjoint edges.
std::int64_t dj_graph(const GeometricGraph& g);

// Disjoint partner count for each edge, aligned with graph.edges().  The sum
// over all edges is exactly twice dj_graph.
std::vector<std::int64_t> dj_partner_counts(const GeometricGraph& g);

// Whole-graph tallies.  Optional fields are absent when their defining
// machinery does not apply: avg_degree needs n >= 1, everything from n_l
// through potential needs a locally convex graph with minimum degree one.
struct GraphAggregates {
  std::int64_t n = 0;
  std::int64_t e = 0;
  std::int64_t dj_total = 0;
  std::int64_t m_max = 0;  // max over edges of the disjoint partner count
  std::vector<std::int64_t> dj_per_edge;

  std::optional<BigRat> avg_degree;
  std::optional<std::int64_t> n_l, n_r;  // vertices chosen as extreme by all neighbors
  std::optional<std::int64_t> t_l, t_r;  // edges that are extreme from both ends
  std::optional<std::int64_t> n_ell_pairs;
  std::optional<BigRat> potential;
};

GraphAggregates aggregates(const GeometricGraph& g);

// 2e / n.
BigRat average_degree(std::int64_t n, std::int64_t e);

// (n / 2) * generalized_binom3(2e / n).
BigRat potential_value(std::int64_t n, std::int64_t e);

// Number of distinct unordered pairs {leftmost edge of u, leftmost edge of v}
// over all edges (u, v) of the graph whose two leftmost edges are disjoint.
std::int64_t n_ell_pair_count(const GeometricGraph& g,
                              std::span<const VertexLocalData> local);

// Deletes every leftmost edge, then every vertex whose entire edge set
// pointed at it (alpha_l == degree).  Requires a locally convex graph with
// minimum degree two.
struct PruneResult {
  GeometricGraph graph;
  std::vector<VertexId> original_vertex;  // new id -> id in the parent graph
  std::int64_t n_l = 0;
  std::int64_t t_l = 0;
  bool vertex_count_matches = false;  // |V'| == n - n_l
  bool edge_count_matches = false;    // |E'| == e - n + t_l
};

PruneResult prune_leftmost(const GeometricGraph& g);

}  // namespace djgraph
