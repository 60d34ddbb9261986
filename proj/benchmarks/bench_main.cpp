#include "manta/edge_insertion.hpp"
#include "manta/geometry.hpp"
#include "manta/manta_ray.hpp"
#include "manta/polygon.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

using namespace manta;

namespace {

std::vector<Point> random_points(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(0.0, 1.0);
  std::vector<Point> pts(n);
  for (auto& p : pts) p = {coord(rng), coord(rng)};
  return pts;
}

void BM_Orient2dRandom(benchmark::State& state) {
  const auto pts = random_points(3 * 1024, 1);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(orient2d(pts[i], pts[i + 1], pts[i + 2]));
    i = (i + 3) % pts.size();
  }
}
BENCHMARK(BM_Orient2dRandom);

// Collinear inputs always take the exact path.
void BM_Orient2dDegenerate(benchmark::State& state) {
  const Point a{0.1, 0.1}, b{0.3, 0.3}, c{0.7, 0.7};
  for (auto _ : state) benchmark::DoNotOptimize(orient2d(a, b, c));
}
BENCHMARK(BM_Orient2dDegenerate);

void BM_DpRetriangulateConvex(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  std::vector<Point> pts;
  std::vector<VertexId> ids;
  for (std::size_t i = 0; i < k; ++i) {
    const double a = 2 * kPi * static_cast<double>(i) / static_cast<double>(k);
    pts.push_back({std::cos(a), 0.6 * std::sin(a)});
    ids.push_back(static_cast<VertexId>(i));
  }
  const Polygon poly(pts, ids);
  for (auto _ : state) benchmark::DoNotOptimize(dp_retriangulate(poly));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DpRetriangulateConvex)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_Generate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generate({.n = n}));
}
BENCHMARK(BM_Generate)->Arg(1)->Arg(10)->Arg(25);

void BM_VerifyProposition(benchmark::State& state) {
  const auto inst = generate({.n = static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(verify_proposition(inst));
}
BENCHMARK(BM_VerifyProposition)->Arg(1)->Arg(5)->Arg(10)->Arg(15)->Unit(benchmark::kMillisecond);

void BM_AlgorithmRandom(benchmark::State& state) {
  const PointSet ps(random_points(static_cast<std::size_t>(state.range(0)), 7));
  const auto start = arbitrary_triangulation(ps);
  const auto mode = state.range(1) ? ScanMode::Parallel : ScanMode::Sequential;
  for (auto _ : state) benchmark::DoNotOptimize(edge_insertion_algorithm(start, {.mode = mode}));
}
BENCHMARK(BM_AlgorithmRandom)
    ->ArgsProduct({{10, 20, 40}, {0, 1}})
    ->ArgNames({"points", "parallel"})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
