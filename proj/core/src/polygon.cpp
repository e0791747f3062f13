#include "kcheeger/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kcheeger/error.hpp"

namespace kcheeger {

namespace {

bool lex_less(Point2 a, Point2 b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

// strict left turn a->b->c, with the tolerance on the sine of the turn angle
bool strict_turn(Point2 a, Point2 b, Point2 c) {
  const Point2 u = b - a;
  const Point2 v = c - b;
  return cross(u, v) > kGeomTol * norm(u) * norm(v);
}

double coordinate_scale(std::span<const Point2> pts) {
  double s = 0.0;
  for (const Point2& p : pts) s = std::max({s, std::abs(p.x), std::abs(p.y)});
  return s;
}

}  // namespace

double ring_area(std::span<const Point2> ring) {
  if (ring.size() < 3) return 0.0;
  const Point2 o = ring[0];
  double sum = 0.0;
  double comp = 0.0;
  for (std::size_t i = 1; i + 1 < ring.size(); ++i) {
    const double term = cross(ring[i] - o, ring[i + 1] - o);
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      comp += (sum - t) + term;
    } else {
      comp += (term - t) + sum;
    }
    sum = t;
  }
  return 0.5 * (sum + comp);
}

ConvexPolygon make_polygon(std::span<const Point2> points) {
  for (const Point2& p : points) {
    if (!is_finite(p)) throw Error(ErrorCode::non_finite, "non-finite vertex coordinate");
  }
  std::vector<Point2> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), lex_less);

  const double scale = coordinate_scale(pts);
  if (pts.empty() || scale == 0.0) {
    throw Error(ErrorCode::degenerate_input, "fewer than 3 distinct points");
  }
  const double merge_tol = kGeomTol * scale;
  std::vector<Point2> uniq;
  uniq.reserve(pts.size());
  for (const Point2& p : pts) {
    if (!uniq.empty() && std::abs(p.x - uniq.back().x) <= merge_tol &&
        std::abs(p.y - uniq.back().y) <= merge_tol) {
      continue;
    }
    uniq.push_back(p);
  }
  if (uniq.size() < 3) {
    throw Error(ErrorCode::degenerate_input, "fewer than 3 distinct points");
  }

  // monotone chain; strict turns only, so collinear points drop out
  std::vector<Point2> hull(2 * uniq.size());
  std::size_t k = 0;
  for (const Point2& p : uniq) {
    while (k >= 2 && !strict_turn(hull[k - 2], hull[k - 1], p)) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (auto it = uniq.rbegin() + 1; it != uniq.rend(); ++it) {
    while (k >= lower && !strict_turn(hull[k - 2], hull[k - 1], *it)) --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);  // last point repeats the first

  // the chain junctions (leftmost/rightmost vertices) are not covered by the
  // pop loops above, so sweep out any residual non-strict turn
  bool removed = true;
  while (removed && hull.size() >= 3) {
    removed = false;
    for (std::size_t i = 0; i < hull.size(); ++i) {
      const std::size_t n = hull.size();
      if (!strict_turn(hull[(i + n - 1) % n], hull[i], hull[(i + 1) % n])) {
        hull.erase(hull.begin() + static_cast<std::ptrdiff_t>(i));
        removed = true;
        break;
      }
    }
  }
  if (hull.size() < 3) {
    throw Error(ErrorCode::degenerate_input, "points are collinear");
  }
  const auto first = std::min_element(hull.begin(), hull.end(), lex_less);
  std::rotate(hull.begin(), first, hull.end());

  const double a = ring_area(hull);
  if (!(a > 0.0)) {
    throw Error(ErrorCode::degenerate_input, "degenerate hull");
  }
  return ConvexPolygon(std::move(hull), a);
}

ConvexPolygon regular_polygon(int n, double circumradius, double phase) {
  if (n < 3) throw Error(ErrorCode::bad_parameter, "regular polygon needs n >= 3");
  if (!(circumradius > 0.0) || !std::isfinite(circumradius)) {
    throw Error(ErrorCode::bad_parameter, "circumradius must be positive");
  }
  if (!std::isfinite(phase)) throw Error(ErrorCode::non_finite, "non-finite phase");

  std::vector<Point2> v(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double a = phase + 2.0 * M_PI * k / n;
    v[static_cast<std::size_t>(k)] = {circumradius * std::cos(a), circumradius * std::sin(a)};
  }
  const auto first = std::min_element(v.begin(), v.end(), lex_less);
  std::rotate(v.begin(), first, v.end());
  const double a = ring_area(v);
  return ConvexPolygon(std::move(v), a);
}

bool ConvexPolygon::contains(Point2 p, double tol) const {
  const std::size_t n = v_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 e = v_[(i + 1) % n] - v_[i];
    if (cross(e, p - v_[i]) < -tol * norm(e)) return false;
  }
  return true;
}

double ConvexPolygon::diameter() const {
  double best = 0.0;
  for (std::size_t i = 0; i < v_.size(); ++i) {
    for (std::size_t j = i + 1; j < v_.size(); ++j) {
      best = std::max(best, norm_sq(v_[i] - v_[j]));
    }
  }
  return std::sqrt(best);
}

double ConvexPolygon::max_radius() const {
  double best = 0.0;
  for (const Point2& p : v_) best = std::max(best, norm_sq(p));
  return std::sqrt(best);
}

ConvexPolygon ConvexPolygon::scaled(double t) const {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw Error(ErrorCode::bad_parameter, "scale factor must be positive");
  }
  ConvexPolygon out = *this;
  for (Point2& p : out.v_) p = t * p;
  out.area_ = area_ * t * t;
  return out;
}

ConvexPolygon ConvexPolygon::translated(Point2 d) const {
  if (!is_finite(d)) throw Error(ErrorCode::non_finite, "non-finite translation");
  ConvexPolygon out = *this;
  for (Point2& p : out.v_) p = p + d;
  return out;
}

ConvexPolygon minkowski_sum(const ConvexPolygon& p, const ConvexPolygon& q) {
  auto bottom_start = [](const ConvexPolygon& poly) {
    const auto& v = poly.vertices();
    std::size_t b = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
      if (v[i].y < v[b].y || (v[i].y == v[b].y && v[i].x < v[b].x)) b = i;
    }
    std::vector<Point2> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[(b + i) % v.size()];
    return out;
  };
  const std::vector<Point2> a = bottom_start(p);
  const std::vector<Point2> b = bottom_start(q);
  const std::size_t n = a.size();
  const std::size_t m = b.size();

  std::vector<Point2> out;
  out.reserve(n + m + 1);
  Point2 cur = a[0] + b[0];
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < n || j < m) {
    out.push_back(cur);
    if (i == n) {
      cur = cur + (b[(j + 1) % m] - b[j]);
      ++j;
    } else if (j == m) {
      cur = cur + (a[(i + 1) % n] - a[i]);
      ++i;
    } else {
      const Point2 ea = a[(i + 1) % n] - a[i];
      const Point2 eb = b[(j + 1) % m] - b[j];
      const double c = cross(ea, eb);
      if (c > 0.0) {
        cur = cur + ea;
        ++i;
      } else if (c < 0.0) {
        cur = cur + eb;
        ++j;
      } else {
        cur = cur + ea + eb;
        ++i;
        ++j;
      }
    }
  }
  return make_polygon(out);
}

double distance_to_polygon(const ConvexPolygon& p, Point2 x) {
  if (p.contains(x, 0.0)) return 0.0;
  const auto& v = p.vertices();
  const std::size_t n = v.size();
  double best = norm_sq(x - v[0]);
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = v[i];
    const Point2 e = v[(i + 1) % n] - a;
    const double t = std::clamp(dot(x - a, e) / norm_sq(e), 0.0, 1.0);
    best = std::min(best, norm_sq(x - (a + t * e)));
  }
  return std::sqrt(best);
}

double hausdorff_distance(const ConvexPolygon& p, const ConvexPolygon& q) {
  // for convex sets the supremum of the distance function is at a vertex
  double best = 0.0;
  for (const Point2& v : p.vertices()) best = std::max(best, distance_to_polygon(q, v));
  for (const Point2& v : q.vertices()) best = std::max(best, distance_to_polygon(p, v));
  return best;
}

double radial_extent(const ConvexPolygon& p, Point2 dir) {
  if (!is_finite(dir)) throw Error(ErrorCode::non_finite, "non-finite direction");
  if (norm_sq(dir) == 0.0) throw Error(ErrorCode::zero_direction, "zero direction");
  const auto& v = p.vertices();
  const std::size_t n = v.size();
  double t = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    if (!(cross(v[i], v[(i + 1) % n]) > 0.0)) {
      throw Error(ErrorCode::origin_not_interior, "origin is not interior");
    }
    const Point2 nrm = outward_normal(v[(i + 1) % n] - v[i]);
    const double den = dot(nrm, dir);
    if (den > 0.0) t = std::min(t, dot(nrm, v[i]) / den);
  }
  return t;
}

}  // namespace kcheeger
