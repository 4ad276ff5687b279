#include "djgraph/graph.hpp"

#include <algorithm>
#include <cstdlib>

namespace djgraph {

namespace {

std::string point_str(Point p) {
  return "(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
}

}  // namespace

GeometricGraph::GeometricGraph(
    std::vector<Point> points,
    const std::vector<std::pair<VertexId, VertexId>>& edges)
    : points_(std::move(points)) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const Point p = points_[i];
    if (std::abs(p.x) > kCoordinateCap || std::abs(p.y) > kCoordinateCap) {
      throw BuildError(BuildError::Kind::coordinate_cap,
                       "point " + std::to_string(i) + " " + point_str(p) +
                           " exceeds the coordinate cap of +/-" +
                           std::to_string(kCoordinateCap));
    }
  }
  if (auto violation = find_general_position_violation(points_)) {
    if (violation->kind == GeneralPositionViolation::Kind::duplicate_point) {
      throw BuildError(BuildError::Kind::duplicate_point,
                       "points " + std::to_string(violation->i) + " and " +
                           std::to_string(violation->j) + " coincide at " +
                           point_str(points_[violation->i]));
    }
    throw BuildError(BuildError::Kind::collinear_triple,
                     "points " + std::to_string(violation->i) + ", " +
                         std::to_string(violation->j) + ", " +
                         std::to_string(violation->k) + " are collinear");
  }

  const VertexId vertex_count = n();
  edges_.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= vertex_count || b < 0 || b >= vertex_count) {
      throw BuildError(BuildError::Kind::vertex_out_of_range,
                       "edge (" + std::to_string(a) + ", " + std::to_string(b) +
                           ") references a vertex outside [0, " +
                           std::to_string(vertex_count) + ")");
    }
    if (a == b) {
      throw BuildError(BuildError::Kind::loop_edge,
                       "edge (" + std::to_string(a) + ", " + std::to_string(b) +
                           ") is a loop");
    }
    edges_.push_back(Edge::normalized(a, b));
  }
  std::sort(edges_.begin(), edges_.end());
  const auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw BuildError(BuildError::Kind::duplicate_edge,
                     "edge (" + std::to_string(dup->u) + ", " +
                         std::to_string(dup->v) + ") appears more than once");
  }

  // Freeze adjacency as flat slices; neighbor lists inherit ascending order
  // from the sorted edge list via counting passes.
  std::vector<std::size_t> degree(static_cast<std::size_t>(vertex_count), 0);
  for (const Edge& e : edges_) {
    ++degree[static_cast<std::size_t>(e.u)];
    ++degree[static_cast<std::size_t>(e.v)];
  }
  offsets_.assign(static_cast<std::size_t>(vertex_count) + 1, 0);
  for (std::size_t v = 0; v < degree.size(); ++v) {
    offsets_[v + 1] = offsets_[v] + degree[v];
  }
  adjacency_.resize(offsets_.back());
  incident_.resize(offsets_.back());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    const auto u = static_cast<std::size_t>(e.u);
    const auto v = static_cast<std::size_t>(e.v);
    adjacency_[cursor[u]] = e.v;
    incident_[cursor[u]++] = i;
    adjacency_[cursor[v]] = e.u;
    incident_[cursor[v]++] = i;
  }
  for (std::size_t v = 0; v < degree.size(); ++v) {
    const auto begin = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
    const auto end = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
    if (!std::is_sorted(begin, end)) {
      std::vector<std::pair<VertexId, std::size_t>> slice;
      slice.reserve(degree[v]);
      for (std::size_t i = offsets_[v]; i < offsets_[v + 1]; ++i) {
        slice.emplace_back(adjacency_[i], incident_[i]);
      }
      std::sort(slice.begin(), slice.end());
      for (std::size_t i = 0; i < slice.size(); ++i) {
        adjacency_[offsets_[v] + i] = slice[i].first;
        incident_[offsets_[v] + i] = slice[i].second;
      }
    }
  }
}

std::span<const VertexId> GeometricGraph::neighbors(VertexId v) const {
  const auto i = static_cast<std::size_t>(v);
  return {adjacency_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
}

std::span<const std::size_t> GeometricGraph::incident_edges(VertexId v) const {
  const auto i = static_cast<std::size_t>(v);
  return {incident_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
}

int GeometricGraph::min_degree() const {
  if (n() == 0) return 0;
  int best = degree(0);
  for (VertexId v = 1; v < n(); ++v) best = std::min(best, degree(v));
  return best;
}

int GeometricGraph::max_degree() const {
  int best = 0;
  for (VertexId v = 0; v < n(); ++v) best = std::max(best, degree(v));
  return best;
}

std::optional<std::size_t> GeometricGraph::edge_index(VertexId a,
                                                      VertexId b) const {
  if (a == b) return std::nullopt;
  const Edge target = Edge::normalized(a, b);
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), target);
  if (it == edges_.end() || *it != target) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

}  // namespace djgraph
