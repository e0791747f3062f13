#include "kcheeger/disc_polygon.hpp"

#include <cmath>

#include "kcheeger/error.hpp"

namespace kcheeger::disc {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

void require_even_n(int n) {
  if (n < 4 || n % 2 != 0)
    throw Error(ErrorCode::bad_parameter, "anisotropy order must be even and at least 4");
}

double angle_equation(double x) { return std::asin(x) + x * std::sqrt(1.0 - x * x); }

}  // namespace

double solve_half_side(int n) {
  require_even_n(n);
  const double target = kPi / n;
  double lo = 0.0;
  double hi = std::sin(target);  // g(hi) - target = sin cos > 0
  double x = 0.5 * hi;
  for (int i = 0; i < 100; ++i) {
    const double g = angle_equation(x) - target;
    if (std::abs(g) <= 1e-15) return x;
    if (g > 0.0)
      hi = x;
    else
      lo = x;
    const double step = g / (2.0 * std::sqrt(1.0 - x * x));
    double next = x - step;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == x) return x;
    x = next;
  }
  throw Error(ErrorCode::tolerance_not_met, "half side iteration failed to converge");
}

double cheeger_constant(int n) { return std::tan(kPi / n) / solve_half_side(n); }

double functional_j(int n) {
  const double t = kPi / n;
  return cheeger_constant(n) * std::sqrt(n * std::sin(t) * std::cos(t));
}

double competitor_area(int n, double x) {
  require_even_n(n);
  const double t = kPi / n;
  if (!std::isfinite(x) || x < 0.0 || x > std::sin(t))
    throw Error(ErrorCode::out_of_range, "chord half length outside [0, sin(pi/n)]");
  return kPi - n * (std::asin(x) - x * std::sqrt(1.0 - x * x));
}

double competitor_perimeter(int n, double x) {
  require_even_n(n);
  const double t = kPi / n;
  if (!std::isfinite(x) || x < 0.0 || x > std::sin(t))
    throw Error(ErrorCode::out_of_range, "chord half length outside [0, sin(pi/n)]");
  return 2.0 * n * (x + std::sin(t - std::asin(x)) / std::cos(t));
}

Bounds bounds(int n) {
  require_even_n(n);
  const double t = kPi / n;
  const double root_pi = std::sqrt(kPi);
  Bounds b;
  b.x_lower = 0.5 * std::sin(t);
  b.x_upper = 0.5 * root_pi * std::sqrt(std::tan(t) / n);
  b.j_lower = (2.0 * n / root_pi) * std::sin(t);
  b.j_upper = 2.0 * std::sqrt(n * std::tan(t));
  return b;
}

Analytics analytics(int n) {
  Analytics a;
  a.n = n;
  a.x_bar = solve_half_side(n);
  const double t = kPi / n;
  a.h = std::tan(t) / a.x_bar;
  a.j = a.h * std::sqrt(n * std::sin(t) * std::cos(t));
  a.bounds = bounds(n);
  return a;
}

std::vector<Analytics> table1(std::span<const int> ns) {
  std::vector<Analytics> rows;
  rows.reserve(ns.size());
  for (int n : ns) rows.push_back(analytics(n));
  return rows;
}

ConvexPolygon circumscribed_polygon(int n) {
  require_even_n(n);
  const double t = kPi / n;
  return regular_polygon(n, 1.0 / std::cos(t), t);
}

}  // namespace kcheeger::disc
