#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "djgraph/graph.hpp"

namespace djgraph {

// Exact probability num/den with 0 <= num <= den, den >= 1.
struct Prob {
  std::int64_t num = 0;
  std::int64_t den = 1;

  friend bool operator==(const Prob&, const Prob&) = default;
};

// Accepts "a/b" or a bare integer ("0", "1"); anything else (including
// decimal notation) is rejected so probabilities stay exact.
Prob parse_prob(std::string_view text);
std::string prob_str(Prob p);

std::uint64_t splitmix64(std::uint64_t x);

// Stream seed for a numbered sub-task of a master seed.  All fan-out in the
// search engine goes through this, which keeps every instance reproducible
// in isolation.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

// mt19937_64 plus hand-rolled bounded draws.  The standard pins down the
// engine output exactly but not the distributions, so the rejection sampling
// here is what makes seeds portable across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound), bound >= 1, unbiased via rejection.
  std::uint64_t below(std::uint64_t bound);

  // Uniform in [lo, hi] inclusive.
  std::int64_t int_in(std::int64_t lo, std::int64_t hi);

  // True with probability exactly num/den.
  bool bernoulli(Prob p);

 private:
  std::mt19937_64 engine_;
};

// n >= 3 points in strictly convex position, listed in counterclockwise
// order: a parabola arc composed with a unimodular shear that breaks all
// axis-parallel alignments.  Throws BuildError when n is large enough to
// push coordinates past the cap.
std::vector<Point> convex_position_points(int n);

// The extremal family: n points in convex position, vertex i joined to the
// k + 2 cyclically "most distant" vertices.  Requires n and k of opposite
// parity with 2 <= k < n - 2; with strict_range the window tightens to
// 2 < k < n - 2.
GeometricGraph extremal_gnk(int n, int k, bool strict_range = false);

// Complete graph on n convex-position points.
GeometricGraph convex_complete(int n);

// Every chord of the convex n-gon kept independently with probability p.
GeometricGraph random_convex_graph(int n, Prob p, std::uint64_t seed);

// n points drawn uniformly from [-box, box]^2 with per-point rejection until
// general position holds, then independent edges with probability p.
GeometricGraph random_general_graph(int n, Prob p, std::uint64_t seed,
                                    std::int64_t box = 1'000'000);

// Two vertex-disjoint stars with n leaves each on 2n + 2 convex-position
// points split into two contiguous arcs; every pair of edges from different
// stars is disjoint.
GeometricGraph disjoint_stars(int n);

// Declarative recipe for one generated instance; enough to regenerate the
// exact same graph later.
struct GenSpec {
  std::string kind;  // extremal_gnk | disjoint_stars | random_convex |
                     // random_general | convex_complete
  int n = 0;
  int k = 0;
  Prob p{};
  std::uint64_t seed = 0;
  std::int64_t box = 1'000'000;

  friend bool operator==(const GenSpec&, const GenSpec&) = default;
};

GeometricGraph generate(const GenSpec& spec);
std::string default_name(const GenSpec& spec);

}  // namespace djgraph
