#pragma once

#include <cmath>

namespace kcheeger {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
constexpr Point2 operator-(Point2 a) { return {-a.x, -a.y}; }
constexpr Point2 operator*(double t, Point2 a) { return {t * a.x, t * a.y}; }
constexpr Point2 operator*(Point2 a, double t) { return {t * a.x, t * a.y}; }

constexpr double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
constexpr double norm_sq(Point2 a) { return dot(a, a); }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }

// outward normal of a CCW edge vector
constexpr Point2 outward_normal(Point2 edge) { return {edge.y, -edge.x}; }
// rotate by +90 degrees
constexpr Point2 perp_ccw(Point2 a) { return {-a.y, a.x}; }

inline bool is_finite(Point2 a) { return std::isfinite(a.x) && std::isfinite(a.y); }

}  // namespace kcheeger
