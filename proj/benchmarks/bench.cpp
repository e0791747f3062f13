#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "kcheeger/anisotropy.hpp"
#include "kcheeger/cheeger.hpp"
#include "kcheeger/disc_polygon.hpp"
#include "kcheeger/halfplane.hpp"
#include "kcheeger/polygon.hpp"

using namespace kcheeger;

namespace {

std::vector<Point2> random_points(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Point2> pts(n);
  for (auto& p : pts) p = {u(rng), u(rng)};
  return pts;
}

void bm_convex_hull(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<Point2> pts = random_points(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(make_polygon(pts));
}
BENCHMARK(bm_convex_hull)->Arg(256)->Arg(1024)->Arg(4096);

void bm_halfplane_intersection(benchmark::State& state) {
  ConvexPolygon p = regular_polygon(static_cast<int>(state.range(0)), 1.0, 0.0);
  std::vector<HalfPlane> planes = edge_halfplanes(p);
  for (auto _ : state) benchmark::DoNotOptimize(intersect_halfplanes(planes));
}
BENCHMARK(bm_halfplane_intersection)->Arg(256)->Arg(1024)->Arg(4096);

void bm_support_query(benchmark::State& state) {
  Anisotropy k(regular_polygon(static_cast<int>(state.range(0)), 1.0, 0.0));
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 6.28318530717958648);
  std::vector<Point2> dirs(512);
  for (auto& d : dirs) {
    const double a = u(rng);
    d = {std::cos(a), std::sin(a)};
  }
  for (auto _ : state) {
    double acc = 0.0;
    for (const Point2& d : dirs) acc += k.support(d);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(bm_support_query)->Arg(64)->Arg(1024)->Arg(4096);

void bm_solve_cheeger_square_disc(benchmark::State& state) {
  const Point2 corners[] = {{0.5, 0.5}, {-0.5, 0.5}, {-0.5, -0.5}, {0.5, -0.5}};
  ConvexPolygon omega = make_polygon(corners);
  Anisotropy k(regular_polygon(static_cast<int>(state.range(0)), 1.0, 0.0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_cheeger(omega, k));
}
BENCHMARK(bm_solve_cheeger_square_disc)->Arg(256)->Arg(1024)->Arg(4096);

void bm_disc_analytics(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(disc::analytics(200));
}
BENCHMARK(bm_disc_analytics);

}  // namespace

BENCHMARK_MAIN();
