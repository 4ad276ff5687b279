#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "djgraph/geometry.hpp"

namespace djgraph {

using VertexId = std::int32_t;

// Undirected edge held with u < v; the graph stores edges sorted
// lexicographically, which doubles as the canonical form for comparisons.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  static Edge normalized(VertexId a, VertexId b) {
    return a < b ? Edge{a, b} : Edge{b, a};
  }

  friend constexpr bool operator==(const Edge&, const Edge&) = default;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

struct BuildError : std::runtime_error {
  enum class Kind {
    coordinate_cap,
    duplicate_point,
    collinear_triple,
    vertex_out_of_range,
    loop_edge,
    duplicate_edge,
  };

  BuildError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind(kind) {}

  Kind kind;
};

// Straight-line drawing of a simple graph on points in general position.
// Construction validates everything up front, so instances are immutable and
// always well-formed: coordinates within the cap, pairwise distinct points,
// no collinear triple, edges deduplicated, loop-free and sorted.
class GeometricGraph {
 public:
  GeometricGraph(std::vector<Point> points,
                 const std::vector<std::pair<VertexId, VertexId>>& edges);

  VertexId n() const { return static_cast<VertexId>(points_.size()); }
  std::int64_t e() const { return static_cast<std::int64_t>(edges_.size()); }

  const std::vector<Point>& points() const { return points_; }
  const std::vector<Edge>& edges() const { return edges_; }

  Point position(VertexId v) const { return points_[static_cast<size_t>(v)]; }
  Edge edge(std::size_t index) const { return edges_[index]; }

  // Neighbor ids in ascending order.
  std::span<const VertexId> neighbors(VertexId v) const;
  // Indices into edges() of the edges incident to v, ascending.
  std::span<const std::size_t> incident_edges(VertexId v) const;

  int degree(VertexId v) const {
    return static_cast<int>(neighbors(v).size());
  }
  int min_degree() const;
  int max_degree() const;

  bool has_edge(VertexId a, VertexId b) const {
    return edge_index(a, b).has_value();
  }
  std::optional<std::size_t> edge_index(VertexId a, VertexId b) const;

  // Segment endpoints of an edge by index.
  std::pair<Point, Point> segment(std::size_t edge_index) const {
    const Edge& e = edges_[edge_index];
    return {position(e.u), position(e.v)};
  }

  friend bool operator==(const GeometricGraph&, const GeometricGraph&) = default;

 private:
  std::vector<Point> points_;
  std::vector<Edge> edges_;
  std::vector<VertexId> adjacency_;         // concatenated neighbor lists
  std::vector<std::size_t> incident_;      // concatenated incident edge ids
  std::vector<std::size_t> offsets_;       // per-vertex slice boundaries
};

}  // namespace djgraph
