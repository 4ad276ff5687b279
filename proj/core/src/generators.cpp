#include "djgraph/generators.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <stdexcept>

#include "djgraph/analysis.hpp"

namespace djgraph {

namespace {

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Prob parse_prob(std::string_view text) {
  const auto slash = text.find('/');
  Prob p;
  if (slash == std::string_view::npos) {
    p.num = parse_int(text);
    p.den = 1;
  } else {
    p.num = parse_int(text.substr(0, slash));
    p.den = parse_int(text.substr(slash + 1));
  }
  if (p.den < 1 || p.num < 0 || p.num > p.den) {
    throw std::invalid_argument("probability '" + std::string(text) +
                                "' is not a rational in [0, 1]");
  }
  return p;
}

std::string prob_str(Prob p) {
  if (p.den == 1) return std::to_string(p.num);
  return std::to_string(p.num) + "/" + std::to_string(p.den);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master ^ splitmix64(index + 0x9E3779B97F4A7C15ull));
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: zero bound");
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return r % bound;
  }
}

std::int64_t Rng::int_in(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("Rng::int_in: empty range");
  const auto width =
      static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) +
                                   below(width));
}

bool Rng::bernoulli(Prob p) {
  if (p.num == 0) return false;
  if (p.num == p.den) return true;
  return below(static_cast<std::uint64_t>(p.den)) <
         static_cast<std::uint64_t>(p.num);
}

std::vector<Point> convex_position_points(int n) {
  if (n < 3) {
    throw std::invalid_argument(
        "convex_position_points: need at least three points");
  }
  // t -> (t, t^2 + s t) is the parabola sheared by the unimodular map
  // (x, y) -> (x, y + s x); with s = n + 1 no two points share an x or a y
  // coordinate, and counterclockwise convex order is ascending t.
  const std::int64_t half = n / 2;
  const std::int64_t s = n + 1;
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const std::int64_t t = i - half;
    const Point p{t, t * t + s * t};
    if (std::abs(p.x) > kCoordinateCap || std::abs(p.y) > kCoordinateCap) {
      throw BuildError(BuildError::Kind::coordinate_cap,
                       "convex_position_points: n = " + std::to_string(n) +
                           " pushes coordinates past the cap");
    }
    out.push_back(p);
  }
  return out;
}

GeometricGraph extremal_gnk(int n, int k, bool strict_range) {
  const int k_floor = strict_range ? 3 : 2;
  if (k < k_floor || k >= n - 2) {
    throw std::invalid_argument(
        "extremal_gnk: k must satisfy " + std::to_string(k_floor) +
        " <= k <= n - 3 (got n = " + std::to_string(n) +
        ", k = " + std::to_string(k) + ")");
  }
  if ((n % 2) == (k % 2)) {
    throw std::invalid_argument(
        "extremal_gnk: n and k must have opposite parity (got n = " +
        std::to_string(n) + ", k = " + std::to_string(k) + ")");
  }
  // Join i to the k + 2 cyclic offsets centred on the antipode; opposite
  // parity makes the window (n-k-1)/2 .. (n+k+1)/2 integral.
  const int lo = (n - k - 1) / 2;
  const int hi = (n + k + 1) / 2;
  std::set<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i < n; ++i) {
    for (int d = lo; d <= hi; ++d) {
      const int j = (i + d) % n;
      edges.insert(i < j ? std::pair{i, j} : std::pair{j, i});
    }
  }
  return GeometricGraph(convex_position_points(n),
                        {edges.begin(), edges.end()});
}

GeometricGraph convex_complete(int n) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return GeometricGraph(convex_position_points(n), edges);
}

GeometricGraph random_convex_graph(int n, Prob p, std::uint64_t seed) {
  std::vector<Point> points = convex_position_points(n);
  Rng rng(seed);
  std::vector<std::pair<VertexId, VertexId>> edges;
  // Chord order is part of the determinism contract: lexicographic (i, j).
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.bernoulli(p)) edges.emplace_back(i, j);
    }
  }
  return GeometricGraph(std::move(points), edges);
}

GeometricGraph random_general_graph(int n, Prob p, std::uint64_t seed,
                                    std::int64_t box) {
  if (n < 1) {
    throw std::invalid_argument("random_general_graph: need n >= 1");
  }
  if (box < 1 || box > kCoordinateCap) {
    throw std::invalid_argument(
        "random_general_graph: box must lie in [1, " +
        std::to_string(kCoordinateCap) + "]");
  }
  Rng rng(seed);
  std::vector<Point> points;
  points.reserve(static_cast<std::size_t>(n));
  constexpr int kMaxAttempts = 1000;
  while (points.size() < static_cast<std::size_t>(n)) {
    bool placed = false;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
      const Point candidate{rng.int_in(-box, box), rng.int_in(-box, box)};
      bool ok = true;
      for (std::size_t i = 0; i < points.size() && ok; ++i) {
        if (points[i] == candidate) ok = false;
        for (std::size_t j = i + 1; j < points.size() && ok; ++j) {
          if (orientation(points[i], points[j], candidate) == Sign::zero) {
            ok = false;
          }
        }
      }
      if (ok) {
        points.push_back(candidate);
        placed = true;
        break;
      }
    }
    if (!placed) {
      throw std::runtime_error(
          "random_general_graph: could not place point " +
          std::to_string(points.size()) + " in general position after " +
          std::to_string(kMaxAttempts) + " attempts; enlarge the box");
    }
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.bernoulli(p)) edges.emplace_back(i, j);
    }
  }
  return GeometricGraph(std::move(points), edges);
}

GeometricGraph disjoint_stars(int n) {
  if (n < 1) throw std::invalid_argument("disjoint_stars: need n >= 1");
  const int total = 2 * n + 2;
  std::vector<Point> points = convex_position_points(total);
  std::vector<std::pair<VertexId, VertexId>> edges;
  // Centers sit at the ends of two contiguous arcs, so edges of different
  // stars never share endpoints or cross.
  for (int leaf = 1; leaf <= n; ++leaf) edges.emplace_back(0, leaf);
  for (int leaf = n + 2; leaf <= 2 * n + 1; ++leaf) {
    edges.emplace_back(n + 1, leaf);
  }
  return GeometricGraph(std::move(points), edges);
}

GeometricGraph generate(const GenSpec& spec) {
  if (spec.kind == "extremal_gnk") return extremal_gnk(spec.n, spec.k);
  if (spec.kind == "disjoint_stars") return disjoint_stars(spec.n);
  if (spec.kind == "random_convex") {
    return random_convex_graph(spec.n, spec.p, spec.seed);
  }
  if (spec.kind == "random_general") {
    return random_general_graph(spec.n, spec.p, spec.seed, spec.box);
  }
  if (spec.kind == "convex_complete") return convex_complete(spec.n);
  throw std::invalid_argument("generate: unknown kind '" + spec.kind + "'");
}

std::string default_name(const GenSpec& spec) {
  if (spec.kind == "extremal_gnk") {
    return "gnk-" + std::to_string(spec.n) + "-" + std::to_string(spec.k);
  }
  if (spec.kind == "disjoint_stars") {
    return "stars-" + std::to_string(spec.n);
  }
  if (spec.kind == "convex_complete") {
    return "complete-" + std::to_string(spec.n);
  }
  std::string name = spec.kind + "-n" + std::to_string(spec.n) + "-p" +
                     std::to_string(spec.p.num) + "of" +
                     std::to_string(spec.p.den) + "-s" +
                     std::to_string(spec.seed);
  if (spec.kind == "random_general") {
    name += "-b" + std::to_string(spec.box);
  }
  return name;
}

}  // namespace djgraph
