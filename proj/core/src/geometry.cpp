#include "djgraph/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace djgraph {

namespace {

using int128 = __int128;

int128 cross(Point u, Point v) {
  return int128(u.x) * int128(v.y) - int128(u.y) * int128(v.x);
}

Sign sign_of(int128 v) {
  if (v > 0) return Sign::positive;
  if (v < 0) return Sign::negative;
  return Sign::zero;
}

}  // namespace

Sign orientation(Point p, Point q, Point r) {
  return sign_of(cross(q - p, r - p));
}

Sign angle_sign(Point x, Point y, Point z) {
  if (x == y || z == y) {
    throw DegenerateInputError("angle_sign: ray endpoint coincides with the apex");
  }
  return sign_of(cross(x - y, z - y));
}

bool point_on_segment(Point a, Point b, Point p) {
  if (orientation(a, b, p) != Sign::zero) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_intersect(Point a, Point b, Point c, Point d) {
  const int o1 = sign_int(orientation(c, d, a));
  const int o2 = sign_int(orientation(c, d, b));
  const int o3 = sign_int(orientation(a, b, c));
  const int o4 = sign_int(orientation(a, b, d));
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && point_on_segment(c, d, a)) return true;
  if (o2 == 0 && point_on_segment(c, d, b)) return true;
  if (o3 == 0 && point_on_segment(a, b, c)) return true;
  if (o4 == 0 && point_on_segment(a, b, d)) return true;
  return false;
}

bool segments_disjoint(Point a, Point b, Point c, Point d) {
  return !segments_intersect(a, b, c, d);
}

std::vector<Point> convex_hull(std::vector<Point> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  const std::size_t n = points.size();
  if (n <= 2) return points;

  std::vector<Point> hull(2 * n);
  std::size_t k = 0;
  // Lower hull, then upper hull; non-strict turns are popped so the result
  // keeps corner vertices only.
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 &&
           sign_int(orientation(hull[k - 2], hull[k - 1], points[i])) <= 0) {
      --k;
    }
    hull[k++] = points[i];
  }
  for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower &&
           sign_int(orientation(hull[k - 2], hull[k - 1], points[i])) <= 0) {
      --k;
    }
    hull[k++] = points[i];
  }
  hull.resize(k - 1);  // last point repeats the first
  return hull;
}

bool point_in_convex_hull(Point p, std::span<const Point> points) {
  if (points.empty()) {
    throw DegenerateInputError("point_in_convex_hull: empty point set");
  }
  std::vector<Point> hull = convex_hull({points.begin(), points.end()});
  if (hull.size() == 1) return p == hull[0];
  if (hull.size() == 2) return point_on_segment(hull[0], hull[1], p);
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Point& a = hull[i];
    const Point& b = hull[(i + 1) % hull.size()];
    if (orientation(a, b, p) == Sign::negative) return false;
  }
  return true;
}

std::optional<GeneralPositionViolation>
find_general_position_violation(std::span<const Point> points) {
  const std::size_t n = points.size();
  // Duplicate scan through a sorted index view keeps this O(n log n).
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return points[a] < points[b] || (points[a] == points[b] && a < b);
  });
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (points[order[i]] == points[order[i + 1]]) {
      auto [lo, hi] = std::minmax(order[i], order[i + 1]);
      return GeneralPositionViolation{
          GeneralPositionViolation::Kind::duplicate_point, lo, hi, 0};
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (orientation(points[i], points[j], points[k]) == Sign::zero) {
          return GeneralPositionViolation{
              GeneralPositionViolation::Kind::collinear_triple, i, j, k};
        }
      }
    }
  }
  return std::nullopt;
}

bool in_general_position(std::span<const Point> points) {
  return !find_general_position_violation(points).has_value();
}

namespace {

// 0 for the upper half-plane (y > 0, or y == 0 and x > 0), 1 for the rest.
int half_plane(Point d) {
  return (d.y > 0 || (d.y == 0 && d.x > 0)) ? 0 : 1;
}

}  // namespace

bool ccw_direction_less(Point u, Point v) {
  const int hu = half_plane(u);
  const int hv = half_plane(v);
  if (hu != hv) return hu < hv;
  return cross(u, v) > 0;
}

std::optional<AngularExtremes> widest_gap_extremes(Point pivot,
                                                   std::span<const Point> dirs) {
  if (dirs.empty()) {
    throw DegenerateInputError("widest_gap_extremes: empty direction list");
  }
  std::vector<Point> rel(dirs.size());
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    rel[i] = dirs[i] - pivot;
    if (rel[i] == Point{0, 0}) {
      throw DegenerateInputError(
          "widest_gap_extremes: direction " + std::to_string(i) +
          " coincides with the pivot");
    }
  }
  for (std::size_t i = 0; i < rel.size(); ++i) {
    for (std::size_t j = i + 1; j < rel.size(); ++j) {
      if (cross(rel[i], rel[j]) == 0) {
        throw DegenerateInputError(
            "widest_gap_extremes: directions " + std::to_string(i) + " and " +
            std::to_string(j) + " are collinear with the pivot");
      }
    }
  }
  if (dirs.size() == 1) {
    return AngularExtremes{dirs[0], dirs[0]};
  }

  std::vector<std::size_t> order(dirs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return ccw_direction_less(rel[a], rel[b]);
  });

  // Gaps between circularly consecutive directions sum to 2*pi, so at most
  // one of them can exceed pi; it is flagged exactly by a negative cross
  // product (a zero would mean collinear directions, excluded above).
  std::optional<AngularExtremes> found;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::size_t j = (i + 1) % order.size();
    if (cross(rel[order[i]], rel[order[j]]) < 0) {
      assert(!found);
      found = AngularExtremes{dirs[order[j]], dirs[order[i]]};
    }
  }
  return found;
}

}  // namespace djgraph
