#pragma once

#include <span>
#include <vector>

#include "kcheeger/point2.hpp"

namespace kcheeger {

// convexity / dedup tolerance: sine of the turn angle at a vertex must exceed
// this, and vertices closer than this (relative to the coordinate scale) merge
inline constexpr double kGeomTol = 1e-9;

// Closed convex polygon: at least 3 vertices, counterclockwise, strictly
// convex, first vertex lexicographically smallest (x, then y).
class ConvexPolygon {
 public:
  ConvexPolygon() = default;  // empty placeholder, meant to be assigned over

  const std::vector<Point2>& vertices() const { return v_; }
  std::size_t size() const { return v_.size(); }
  const Point2& operator[](std::size_t i) const { return v_[i]; }
  double area() const { return area_; }

  // signed distance slack: every edge half-plane satisfied within tol
  bool contains(Point2 p, double tol) const;
  double diameter() const;  // O(n^2)
  double max_radius() const;

  ConvexPolygon scaled(double t) const;  // t > 0
  ConvexPolygon translated(Point2 d) const;

 private:
  ConvexPolygon(std::vector<Point2> v, double a) : v_(std::move(v)), area_(a) {}

  std::vector<Point2> v_;
  double area_ = 0.0;

  friend ConvexPolygon make_polygon(std::span<const Point2> points);
  friend ConvexPolygon regular_polygon(int n, double circumradius, double phase);
};

// convex hull of the input; throws degenerate_input if fewer than 3
// effective vertices survive, non_finite on NaN/inf coordinates
ConvexPolygon make_polygon(std::span<const Point2> points);

// vertices at circumradius * (cos(phase + 2*pi*k/n), sin(phase + 2*pi*k/n))
ConvexPolygon regular_polygon(int n, double circumradius, double phase);

ConvexPolygon minkowski_sum(const ConvexPolygon& p, const ConvexPolygon& q);

double hausdorff_distance(const ConvexPolygon& p, const ConvexPolygon& q);

// distance from x to the solid polygon (0 if inside)
double distance_to_polygon(const ConvexPolygon& p, Point2 x);

// largest t with t*dir inside p; requires the origin strictly interior
double radial_extent(const ConvexPolygon& p, Point2 dir);

// shoelace with compensated summation; positive for CCW rings
double ring_area(std::span<const Point2> ring);

}  // namespace kcheeger
