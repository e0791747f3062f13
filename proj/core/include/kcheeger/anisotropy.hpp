#pragma once

#include <optional>
#include <span>
#include <vector>

#include "kcheeger/polygon.hpp"

namespace kcheeger {

// Centrally symmetric convex body with its polar dual cached. Construction
// symmetrizes the input (hull of V and -V); was_symmetrized reports whether
// that changed anything.
class Anisotropy {
 public:
  explicit Anisotropy(const ConvexPolygon& body);

  static Anisotropy from_points(std::span<const Point2> points);

  const ConvexPolygon& body() const { return body_; }
  const ConvexPolygon& polar() const { return polar_; }
  double area_body() const { return body_.area(); }
  double area_polar() const { return polar_.area(); }
  bool was_symmetrized() const { return symmetrized_; }

  // support function of the body (the polar norm), 1-homogeneous; O(log n)
  double support(Point2 dir) const;

 private:
  ConvexPolygon body_;
  ConvexPolygon polar_;
  bool symmetrized_ = false;
  std::vector<double> normal_angle_;  // ascending; entry j is edge (first_edge_ + j) mod n
  std::size_t first_edge_ = 0;
};

inline double support_value(const Anisotropy& k, Point2 direction) {
  return k.support(direction);
}

// polar dual {x : dot(x, v) <= 1 for every vertex v}; the origin must be
// strictly interior
ConvexPolygon polar_body(const ConvexPolygon& k);

// inner parallel body omega minus rho*K: every edge half-plane of omega moves
// inward by rho times the support of K at its normal; nullopt when empty
std::optional<ConvexPolygon> erode(const ConvexPolygon& omega, const Anisotropy& k, double rho);

// sum of edge length times support of K at the unit outward normal
double anisotropic_perimeter(const ConvexPolygon& e, const Anisotropy& k);

}  // namespace kcheeger
