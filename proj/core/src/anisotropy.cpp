#include "kcheeger/anisotropy.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "kcheeger/error.hpp"
#include "kcheeger/halfplane.hpp"

namespace kcheeger {

namespace {

ConvexPolygon symmetrized_hull(const ConvexPolygon& body) {
  std::vector<Point2> pts;
  pts.reserve(2 * body.size());
  for (std::size_t i = 0; i < body.size(); ++i) {
    pts.push_back(body[i]);
    pts.push_back(-body[i]);
  }
  return make_polygon(pts);
}

}  // namespace

Anisotropy::Anisotropy(const ConvexPolygon& body) {
  ConvexPolygon sym = symmetrized_hull(body);
  double scale = std::max(sym.max_radius(), 1.0);
  if (hausdorff_distance(sym, body) <= kGeomTol * scale) {
    body_ = body;  // already symmetric, keep the caller's exact vertices
  } else {
    body_ = sym;
    symmetrized_ = true;
  }

  polar_ = polar_body(body_);

  const std::size_t n = body_.size();
  std::vector<double> angle(n);
  for (std::size_t j = 0; j < n; ++j) {
    Point2 nrm = outward_normal(body_[(j + 1) % n] - body_[j]);
    angle[j] = std::atan2(nrm.y, nrm.x);
  }
  first_edge_ = static_cast<std::size_t>(
      std::min_element(angle.begin(), angle.end()) - angle.begin());
  normal_angle_.resize(n);
  for (std::size_t k = 0; k < n; ++k) normal_angle_[k] = angle[(first_edge_ + k) % n];
}

Anisotropy Anisotropy::from_points(std::span<const Point2> points) {
  return Anisotropy(make_polygon(points));
}

double Anisotropy::support(Point2 dir) const {
  if (!is_finite(dir)) throw Error(ErrorCode::non_finite, "support direction is not finite");
  if (dir.x == 0.0 && dir.y == 0.0)
    throw Error(ErrorCode::zero_direction, "support direction is zero");

  const std::size_t n = body_.size();
  const double theta = std::atan2(dir.y, dir.x);
  std::size_t idx = static_cast<std::size_t>(
      std::lower_bound(normal_angle_.begin(), normal_angle_.end(), theta) -
      normal_angle_.begin());
  if (idx == n) idx = 0;
  const std::size_t v = (first_edge_ + idx) % n;

  double best = dot(dir, body_[v]);
  best = std::max(best, dot(dir, body_[(v + 1) % n]));
  best = std::max(best, dot(dir, body_[(v + n - 1) % n]));
  return best;
}

ConvexPolygon polar_body(const ConvexPolygon& k) {
  const std::size_t n = k.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = k[i];
    const Point2 b = k[(i + 1) % n];
    if (cross(a, b) <= kGeomTol * norm(a) * norm(b))
      throw Error(ErrorCode::origin_not_interior,
                  "polar body requires the origin strictly inside");
  }

  std::vector<HalfPlane> planes(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = norm(k[i]);
    planes[i] = HalfPlane{k[i] * (1.0 / r), 1.0 / r};
  }
  auto polar = intersect_halfplanes(planes);
  if (!polar) throw Error(ErrorCode::degenerate_input, "polar body is degenerate");
  return *polar;
}

std::optional<ConvexPolygon> erode(const ConvexPolygon& omega, const Anisotropy& k, double rho) {
  if (!std::isfinite(rho)) throw Error(ErrorCode::non_finite, "erosion distance is not finite");
  if (rho < 0.0) throw Error(ErrorCode::negative_rho, "erosion distance is negative");
  if (rho == 0.0) return omega;

  std::vector<HalfPlane> planes = edge_halfplanes(omega);
  for (HalfPlane& h : planes) h.offset -= rho * k.support(h.normal);
  return intersect_halfplanes(planes);
}

double anisotropic_perimeter(const ConvexPolygon& e, const Anisotropy& k) {
  // edge length times support at the unit outward normal, folded into one
  // support call per edge by 1-homogeneity
  double sum = 0.0;
  double comp = 0.0;
  const std::size_t n = e.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double term = k.support(outward_normal(e[(i + 1) % n] - e[i]));
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term))
      comp += (sum - t) + term;
    else
      comp += (term - t) + sum;
    sum = t;
  }
  return sum + comp;
}

}  // namespace kcheeger
