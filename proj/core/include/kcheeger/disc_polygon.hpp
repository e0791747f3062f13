#pragma once

#include <span>
#include <vector>

#include "kcheeger/polygon.hpp"

// closed-form theory for the unit disc with a circumscribed regular n-gon
// anisotropy (n >= 4 even, apothem 1, two sides parallel to the y axis)
namespace kcheeger::disc {

struct Bounds {
  double x_lower = 0.0;
  double x_upper = 0.0;
  double j_lower = 0.0;
  double j_upper = 0.0;
};

struct Analytics {
  int n = 0;
  double x_bar = 0.0;  // half side length of the inner body, root of the angle equation
  double h = 0.0;      // Cheeger constant tan(pi/n) / x_bar
  double j = 0.0;      // h * sqrt(polar area)
  Bounds bounds;
};

// root of arcsin(x) + x sqrt(1 - x^2) = pi/n on (0, sin(pi/n))
double solve_half_side(int n);

double cheeger_constant(int n);
double functional_j(int n);

// area and anisotropic perimeter of the disc truncated by n symmetric chords
// of half length x; x must lie in [0, sin(pi/n)]
double competitor_area(int n, double x);
double competitor_perimeter(int n, double x);

Bounds bounds(int n);
Analytics analytics(int n);
std::vector<Analytics> table1(std::span<const int> ns);

// the anisotropy body itself, vertices at angles pi/n + 2 pi k / n
ConvexPolygon circumscribed_polygon(int n);

}  // namespace kcheeger::disc
