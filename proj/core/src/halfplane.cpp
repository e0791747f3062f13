#include "kcheeger/halfplane.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "kcheeger/error.hpp"

namespace kcheeger {

std::vector<HalfPlane> edge_halfplanes(const ConvexPolygon& p) {
  const auto& v = p.vertices();
  const std::size_t n = v.size();
  std::vector<HalfPlane> planes(n);
  for (std::size_t i = 0; i < n; ++i) {
    Point2 nrm = outward_normal(v[(i + 1) % n] - v[i]);
    nrm = (1.0 / norm(nrm)) * nrm;
    planes[i] = {nrm, dot(nrm, v[i])};
  }
  return planes;
}

namespace detail {

namespace {

constexpr double kParallelTol = 1e-13;
constexpr double kAngleTol = 1e-12;

struct Corner {
  enum Kind { point, at_infinity, contradiction, coincident } kind;
  Point2 p;    // kind == point
  Point2 dir;  // kind == at_infinity
};

// boundary corner between plane a and the next plane b in CCW order
Corner corner(const HalfPlane& a, const HalfPlane& b) {
  const double det = cross(a.normal, b.normal);
  if (std::abs(det) > kParallelTol) {
    return {Corner::point,
            {(a.offset * b.normal.y - b.offset * a.normal.y) / det,
             (b.offset * a.normal.x - a.offset * b.normal.x) / det},
            {}};
  }
  if (dot(a.normal, b.normal) < 0.0) {
    if (a.offset + b.offset < 0.0) return {Corner::contradiction, {}, {}};
    // compatible strip; the corner sits at infinity along a's boundary
    return {Corner::at_infinity, {}, perp_ccw(a.normal)};
  }
  return {Corner::coincident, {}, {}};
}

// whether the corner lies strictly outside h
bool violates(const HalfPlane& h, const Corner& c) {
  switch (c.kind) {
    case Corner::point: return dot(h.normal, c.p) > h.offset;
    case Corner::at_infinity: return dot(h.normal, c.dir) > 0.0;
    case Corner::coincident: return false;
    case Corner::contradiction: return false;  // handled by the caller
  }
  return false;
}

}  // namespace

std::vector<HalfPlane> sorted_halfplanes(std::span<const HalfPlane> planes) {
  std::vector<std::pair<double, HalfPlane>> keyed;
  keyed.reserve(planes.size());
  for (const HalfPlane& h : planes) {
    if (!is_finite(h.normal) || !std::isfinite(h.offset)) {
      throw Error(ErrorCode::non_finite, "non-finite half-plane");
    }
    const double len = norm(h.normal);
    if (len == 0.0) throw Error(ErrorCode::zero_direction, "zero half-plane normal");
    const HalfPlane unit{(1.0 / len) * h.normal, h.offset / len};
    keyed.emplace_back(std::atan2(unit.normal.y, unit.normal.x), unit);
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<HalfPlane> out;
  std::vector<double> ang;
  out.reserve(keyed.size());
  for (const auto& [angle, h] : keyed) {
    if (!out.empty() && angle - ang.back() <= kAngleTol) {
      if (h.offset < out.back().offset) out.back() = h;
      continue;
    }
    out.push_back(h);
    ang.push_back(angle);
  }
  // the angle range wraps: first and last may coincide too
  if (out.size() >= 2 && (ang.front() + 2.0 * M_PI) - ang.back() <= kAngleTol) {
    if (out.back().offset < out.front().offset) out.front() = out.back();
    out.pop_back();
  }
  return out;
}

bool intersect_sorted_ring(std::span<const HalfPlane> planes, std::vector<Point2>& ring) {
  ring.clear();
  if (planes.size() < 3) return false;

  std::deque<HalfPlane> dq;
  for (const HalfPlane& h : planes) {
    while (dq.size() >= 2) {
      const Corner c = corner(dq[dq.size() - 2], dq.back());
      if (c.kind == Corner::contradiction) return false;
      if (!violates(h, c)) break;
      dq.pop_back();
    }
    while (dq.size() >= 2) {
      const Corner c = corner(dq[0], dq[1]);
      if (c.kind == Corner::contradiction) return false;
      if (!violates(h, c)) break;
      dq.pop_front();
    }
    dq.push_back(h);
  }
  bool trimmed = true;
  while (trimmed && dq.size() >= 3) {
    trimmed = false;
    {
      const Corner c = corner(dq[dq.size() - 2], dq.back());
      if (c.kind == Corner::contradiction) return false;
      if (violates(dq.front(), c)) {
        dq.pop_back();
        trimmed = true;
        continue;
      }
    }
    {
      const Corner c = corner(dq[0], dq[1]);
      if (c.kind == Corner::contradiction) return false;
      if (violates(dq.back(), c)) {
        dq.pop_front();
        trimmed = true;
      }
    }
  }
  if (dq.size() < 3) return false;

  ring.reserve(dq.size());
  for (std::size_t i = 0; i < dq.size(); ++i) {
    const Corner c = corner(dq[i], dq[(i + 1) % dq.size()]);
    if (c.kind != Corner::point) return false;  // bounded nonempty regions have finite corners
    ring.push_back(c.p);
  }
  if (!(ring_area(ring) > 0.0)) return false;
  return true;
}

}  // namespace detail

std::optional<ConvexPolygon> intersect_halfplanes(std::span<const HalfPlane> planes) {
  const std::vector<HalfPlane> sorted = detail::sorted_halfplanes(planes);
  std::vector<Point2> ring;
  if (!detail::intersect_sorted_ring(sorted, ring)) return std::nullopt;
  try {
    return make_polygon(ring);
  } catch (const Error&) {
    return std::nullopt;  // sliver below the geometric tolerance
  }
}

}  // namespace kcheeger
