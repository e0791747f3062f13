#pragma once

#include <optional>
#include <span>
#include <vector>

#include "kcheeger/polygon.hpp"

namespace kcheeger {

// {x : dot(x, normal) <= offset} with |normal| = 1
struct HalfPlane {
  Point2 normal;
  double offset = 0.0;
};

// one half-plane per edge, in CCW edge order
std::vector<HalfPlane> edge_halfplanes(const ConvexPolygon& p);

// bounded intersection of half-planes whose normals span all directions;
// nullopt when the interior is empty
std::optional<ConvexPolygon> intersect_halfplanes(std::span<const HalfPlane> planes);

namespace detail {

// normalize, sort by normal angle, drop duplicates (keeping the tighter offset)
std::vector<HalfPlane> sorted_halfplanes(std::span<const HalfPlane> planes);

// planes must come from sorted_halfplanes (or be offset-shifted copies of such
// a list); fills ring with the CCW boundary corners, returns false when empty
bool intersect_sorted_ring(std::span<const HalfPlane> planes, std::vector<Point2>& ring);

}  // namespace detail

}  // namespace kcheeger
