#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace djgraph {

// Coordinates are capped so that every 2x2 determinant of coordinate
// differences fits comfortably in a signed 128-bit integer.  All predicates
// below are exact: they never touch floating point.
inline constexpr std::int64_t kCoordinateCap = std::int64_t{1} << 30;

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend constexpr bool operator==(const Point&, const Point&) = default;
  friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

constexpr Point operator-(Point a, Point b) { return Point{a.x - b.x, a.y - b.y}; }
constexpr Point operator+(Point a, Point b) { return Point{a.x + b.x, a.y + b.y}; }

enum class Sign : int { negative = -1, zero = 0, positive = 1 };

constexpr int sign_int(Sign s) { return static_cast<int>(s); }

// Thrown when an input violates a geometric precondition (coincident points
// where distinct ones are required, directions collinear with the pivot, ...).
struct DegenerateInputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Sign of the cross product (q - p) x (r - p): positive iff p, q, r make a
// counterclockwise turn, zero iff collinear.
Sign orientation(Point p, Point q, Point r);

// Sign of the oriented angle at y, measured counterclockwise from ray y->x to
// ray y->z; the angle lives in (-pi, pi), so the sign is the sign of
// (x - y) x (z - y).  Zero iff x, y, z are collinear.  Throws
// DegenerateInputError iff x == y or z == y.
Sign angle_sign(Point x, Point y, Point z);

// True iff the closed segments [a, b] and [c, d] share no point.  A shared
// endpoint, a touching interior, or a proper crossing all count as
// non-disjoint.  Segments must be non-degenerate (a != b, c != d).
bool segments_disjoint(Point a, Point b, Point c, Point d);

// Complement of segments_disjoint, exposed for callers that think in terms of
// intersection tests.
bool segments_intersect(Point a, Point b, Point c, Point d);

// True iff p lies on the closed segment [a, b].
bool point_on_segment(Point a, Point b, Point p);

// Strict convex hull in counterclockwise order (no collinear points retained
// on hull edges).  Duplicates are removed first.  Inputs whose distinct
// points are all collinear come back as the two extreme points; a single
// distinct point comes back alone.
std::vector<Point> convex_hull(std::vector<Point> points);

// True iff p lies in the closed convex hull of the (non-empty) point set.
bool point_in_convex_hull(Point p, std::span<const Point> points);

// Describes the first witness that a point set fails general position.
struct GeneralPositionViolation {
  enum class Kind { duplicate_point, collinear_triple };
  Kind kind;
  // Indices into the input: i < j always; k participates only for triples.
  std::size_t i = 0, j = 0, k = 0;
};

std::optional<GeneralPositionViolation>
find_general_position_violation(std::span<const Point> points);

// True iff the points are pairwise distinct and no three are collinear.
bool in_general_position(std::span<const Point> points);

// Strict weak order on non-zero direction vectors by counterclockwise angle
// in [0, 2*pi), starting at the positive x-axis.  Directions in the upper
// half-plane (y > 0, or y == 0 with x > 0) precede those in the lower one;
// within a half-plane the cross product sign decides.  Equal directions tie.
bool ccw_direction_less(Point u, Point v);

struct AngularExtremes {
  Point first;  // first direction after the wide gap, counterclockwise
  Point last;   // last direction before the wide gap
};

// Sorts the given points by counterclockwise angle around pivot and looks for
// the unique circular gap wider than pi between consecutive directions.  If
// it exists, all directions fit in an open half-plane like cone and the
// returned pair brackets them: first is the clockwise-most direction, last
// the counterclockwise-most.  A single direction is its own first and last.
// Returns nullopt when no gap exceeds pi (the directions surround the pivot).
// Throws DegenerateInputError if the list is empty, contains the pivot, or
// has two entries collinear with the pivot.
std::optional<AngularExtremes> widest_gap_extremes(Point pivot,
                                                   std::span<const Point> dirs);

}  // namespace djgraph
