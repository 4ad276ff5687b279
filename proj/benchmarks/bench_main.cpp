#include <cstdint>
#include <vector>

#include <benchmark/benchmark.h>

#include "djgraph/analysis.hpp"
#include "djgraph/claims.hpp"
#include "djgraph/generators.hpp"
#include "djgraph/geometry.hpp"
#include "djgraph/graph.hpp"

namespace {

using namespace djgraph;

void bm_orientation(benchmark::State& state) {
  // Mixed-sign triples near the coordinate cap stress the 128-bit path.
  std::vector<Point> pts;
  Rng rng(12345);
  for (int i = 0; i < 3 * 1024; ++i) {
    pts.push_back(Point{rng.int_in(-(1 << 30), 1 << 30),
                        rng.int_in(-(1 << 30), 1 << 30)});
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const Sign s = orientation(pts[i], pts[i + 1], pts[i + 2]);
    benchmark::DoNotOptimize(s);
    i = (i + 3) % pts.size();
  }
}
BENCHMARK(bm_orientation);

void bm_segments_disjoint(benchmark::State& state) {
  std::vector<Point> pts;
  Rng rng(67890);
  for (int i = 0; i < 4 * 1024; ++i) {
    pts.push_back(Point{rng.int_in(-1000, 1000), rng.int_in(-1000, 1000)});
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const bool d = segments_disjoint(pts[i], pts[i + 1], pts[i + 2],
                                     pts[i + 3]);
    benchmark::DoNotOptimize(d);
    i = (i + 4) % pts.size();
  }
}
BENCHMARK(bm_segments_disjoint);

void bm_dj_graph_gnk(benchmark::State& state) {
  const GeometricGraph g = extremal_gnk(201, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dj_graph(g));
  }
}
BENCHMARK(bm_dj_graph_gnk)->Unit(benchmark::kMillisecond);

void bm_local_data(benchmark::State& state) {
  const GeometricGraph g = extremal_gnk(201, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(all_vertex_local_data(g));
  }
}
BENCHMARK(bm_local_data)->Unit(benchmark::kMillisecond);

void bm_check_all(benchmark::State& state) {
  const GeometricGraph g = extremal_gnk(12, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_all(g));
  }
}
BENCHMARK(bm_check_all)->Unit(benchmark::kMillisecond);

void bm_extreme_neighbors(benchmark::State& state) {
  const GeometricGraph g = random_convex_graph(64, Prob{1, 2}, 42);
  VertexId v = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(extreme_neighbors(g, v));
    v = (v + 1) % g.n();
  }
}
BENCHMARK(bm_extreme_neighbors);

}  // namespace

BENCHMARK_MAIN();
