#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <vector>

#include "doctest.h"
#include "kcheeger/anisotropy.hpp"
#include "kcheeger/cheeger.hpp"
#include "kcheeger/disc_polygon.hpp"
#include "kcheeger/error.hpp"
#include "kcheeger/optimizer.hpp"
#include "kcheeger/polygon.hpp"
#include "support/check.hpp"
#include "support/reference_values.hpp"

using namespace kcheeger;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

ConvexPolygon unit_square() {
  const Point2 corners[] = {{0.5, 0.5}, {-0.5, 0.5}, {-0.5, -0.5}, {0.5, -0.5}};
  return make_polygon(corners);
}

optimizer::Params square_params() {
  return {{std::sqrt(2.0), std::sqrt(2.0)}, {kPi / 4, 3 * kPi / 4}};
}

bool same_params(const optimizer::Params& a, const optimizer::Params& b) {
  return a.radii == b.radii && a.angles == b.angles;
}

}  // namespace

TEST_SUITE("anisotropy_optimizer") {

TEST_CASE("parameter vector to polygon") {
  ConvexPolygon p = optimizer::params_polygon(square_params());
  REQUIRE(p.size() == 4);
  CHECK(p.area() == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(p.contains({1, 1}, 1e-9));
  CHECK(p.contains({-1, 1}, 1e-9));

  CHECK(thrown_code_of([] { optimizer::params_polygon({{1.0, 1.0}, {0.1}}); }) ==
        ErrorCode::bad_parameter);
  CHECK(thrown_code_of([] { optimizer::params_polygon({{1.0}, {0.1}}); }) ==
        ErrorCode::bad_parameter);
  CHECK(thrown_code_of([] { optimizer::params_polygon({{1.0, 0.0}, {0.1, 0.9}}); }) ==
        ErrorCode::bad_parameter);
  CHECK(thrown_code_of([] { optimizer::params_polygon({{1.0, -2.0}, {0.1, 0.9}}); }) ==
        ErrorCode::bad_parameter);
  CHECK(thrown_code_of([] {
          optimizer::params_polygon({{1.0, std::nan("")}, {0.1, 0.9}});
        }) == ErrorCode::non_finite);
  // all pairs on one line through the origin
  CHECK(thrown_code_of([] { optimizer::params_polygon({{1.0, 2.0}, {0.3, 0.3}}); }) ==
        ErrorCode::params_degenerate);
}

TEST_CASE("a nearly collapsed pair is dropped by the hull, not fatal") {
  optimizer::Params p{{1.0, 0.01, 1.0}, {0.0, kPi / 3, kPi / 2}};
  ConvexPolygon body = optimizer::params_polygon(p);
  CHECK(body.size() == 4);  // the tiny pair is interior
  ConvexPolygon omega = regular_polygon(256, 1.0, 0.0);
  CHECK(std::isfinite(optimizer::objective(omega, p)));
}

TEST_CASE("objective reproduces closed form values on the disc") {
  ConvexPolygon omega = regular_polygon(1024, 1.0, 0.0);

  CHECK(std::abs(optimizer::objective(omega, square_params()) - disc::functional_j(4)) <= 2e-3);

  // circumscribed hexagon: three pairs, radius 2 / sqrt(3)
  const double r6 = 2.0 / std::sqrt(3.0);
  optimizer::Params hex{{r6, r6, r6}, {kPi / 6, kPi / 2, 5 * kPi / 6}};
  CHECK(std::abs(optimizer::objective(omega, hex) - disc::functional_j(6)) <= 2e-3);
}

TEST_CASE("objective invariances") {
  ConvexPolygon omega = regular_polygon(4096, 1.0, 0.0);
  optimizer::Params base{{1.3, 0.8, 1.1}, {0.4, 1.5, 2.4}};
  const double j0 = optimizer::objective(omega, base);

  optimizer::Params scaled = base;
  for (double& r : scaled.radii) r *= 10.0;
  CHECK(std::abs(optimizer::objective(omega, scaled) - j0) <= 1e-9 * j0);

  optimizer::Params rotated = base;
  for (double& a : rotated.angles) a += 0.3;
  CHECK(std::abs(optimizer::objective(omega, rotated) - j0) <= 1e-6 * j0);
}

TEST_CASE("minimization over a square domain finds the square") {
  ConvexPolygon omega = unit_square();
  optimizer::Options opt;
  opt.starts = 4;
  opt.budget = 2000;
  opt.seed = 1;
  optimizer::Result r = optimizer::minimize(omega, 2, opt);
  CHECK(std::abs(r.best_j - refvals::kTwoRootEight) <= 1e-3);
  CHECK(r.converged);
  CHECK(r.evaluations > 0);
  CHECK(std::is_sorted(r.best.angles.begin(), r.best.angles.end()));
  for (double a : r.best.angles) {
    CHECK(a >= 0.0);
    CHECK(a < kPi);
  }
}

TEST_CASE("fixed seeds are reproducible across thread counts") {
  ConvexPolygon omega = unit_square();
  optimizer::Options opt;
  opt.starts = 3;
  opt.budget = 400;
  opt.seed = 11;
  opt.record_trace = true;

  optimizer::Result a = optimizer::minimize(omega, 2, opt);
  optimizer::Result b = optimizer::minimize(omega, 2, opt);
  CHECK(a.best_j == b.best_j);
  CHECK(same_params(a.best, b.best));
  CHECK(a.evaluations == b.evaluations);

  opt.threads = 3;
  optimizer::Result c = optimizer::minimize(omega, 2, opt);
  CHECK(a.best_j == c.best_j);
  CHECK(same_params(a.best, c.best));
  CHECK(a.best_start == c.best_start);
  REQUIRE(a.trace.size() == c.trace.size());
  for (std::size_t i = 0; i < a.trace.size(); ++i) {
    CHECK(a.trace[i].start == c.trace[i].start);
    CHECK(a.trace[i].eval == c.trace[i].eval);
    CHECK(a.trace[i].j == c.trace[i].j);
  }

  opt.threads = 1;
  opt.seed = 12;
  optimizer::Result d = optimizer::minimize(omega, 2, opt);
  // different seed, same optimum within loose tolerance
  CHECK(std::abs(d.best_j - a.best_j) <= 2e-3);
}

TEST_CASE("a tiny budget still returns a finite value without convergence") {
  ConvexPolygon omega = unit_square();
  optimizer::Options opt;
  opt.starts = 2;
  opt.budget = 5;  // dimension is 3, so this is only the initial simplex
  opt.seed = 4;
  optimizer::Result r = optimizer::minimize(omega, 2, opt);
  CHECK(std::isfinite(r.best_j));
  CHECK(!r.converged);
}

TEST_CASE("trace is per start non increasing and consistent with the result") {
  ConvexPolygon omega = unit_square();
  optimizer::Options opt;
  opt.starts = 3;
  opt.budget = 600;
  opt.seed = 21;
  opt.record_trace = true;
  optimizer::Result r = optimizer::minimize(omega, 2, opt);
  REQUIRE(!r.trace.empty());
  std::map<int, double> last;
  std::map<int, long long> last_eval;
  double global_min = 1e300;
  for (const optimizer::TraceEntry& e : r.trace) {
    CHECK(e.j > 0.0);
    CHECK(std::isfinite(e.j));
    auto it = last.find(e.start);
    if (it != last.end()) {
      CHECK(e.j < it->second);
      CHECK(e.eval > last_eval[e.start]);
    }
    last[e.start] = e.j;
    last_eval[e.start] = e.eval;
    global_min = std::min(global_min, e.j);
  }
  CHECK(global_min == r.best_j);
  CHECK(r.evaluations >= static_cast<long long>(r.trace.size()));
}

TEST_CASE("rectangle family drives the functional up") {
  ConvexPolygon omega = regular_polygon(512, 1.0, 0.0);
  const double aspects[] = {1.0, 4.0, 16.0, 64.0};
  std::vector<double> js = optimizer::divergence_probe(omega, aspects);
  REQUIRE(js.size() == 4);
  CHECK(std::abs(js[0] - disc::functional_j(4)) <= 2e-3);
  CHECK(js[1] > js[0]);
  CHECK(js[2] > js[1]);
  CHECK(js[3] > js[2]);

  const double bad[] = {0.5};
  CHECK(thrown_code_of([&] { optimizer::divergence_probe(omega, bad); }) ==
        ErrorCode::bad_parameter);
}

TEST_CASE("option validation") {
  ConvexPolygon omega = unit_square();
  optimizer::Options opt;
  CHECK(thrown_code_of([&] { optimizer::minimize(omega, 1, opt); }) == ErrorCode::bad_parameter);
  opt.starts = 0;
  CHECK(thrown_code_of([&] { optimizer::minimize(omega, 2, opt); }) == ErrorCode::bad_parameter);
  opt.starts = 1;
  opt.budget = 3;  // below dimension + 2
  CHECK(thrown_code_of([&] { optimizer::minimize(omega, 2, opt); }) == ErrorCode::bad_parameter);
  opt.budget = 100;
  opt.threads = 0;
  CHECK(thrown_code_of([&] { optimizer::minimize(omega, 2, opt); }) == ErrorCode::bad_parameter);
  opt.threads = 1;
  opt.r_min = -1.0;
  CHECK(thrown_code_of([&] { optimizer::minimize(omega, 2, opt); }) == ErrorCode::bad_parameter);
}

}  // TEST_SUITE
