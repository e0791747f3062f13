#pragma once

#include "kcheeger/anisotropy.hpp"
#include "kcheeger/polygon.hpp"

namespace kcheeger {

struct CheegerResult {
  double rho = 0.0;       // inverse Cheeger constant, |omega eroded by rho K| = rho^2 |K|
  double h = 0.0;         // Cheeger constant 1/rho
  double residual = 0.0;  // |area deficit| at the returned rho, absolute
  ConvexPolygon inner_body;   // omega eroded by rho K
  ConvexPolygon cheeger_set;  // inner_body plus rho K
};

struct FunctionalValues {
  double h = 0.0;       // Cheeger constant of omega for the anisotropy
  double F = 0.0;       // h / sqrt(area of K), scale invariant in K
  double J = 0.0;       // h * sqrt(area of polar K)
  double mahler = 0.0;  // area K times area polar K
};

// area deficit f(rho) = |omega eroded by rho K| - rho^2 |K|; strictly
// decreasing, positive at 0, its root is 1/h
double rho_deficit(const ConvexPolygon& omega, const Anisotropy& k, double rho);

// bisection on the deficit until |f| <= eps_root * |omega|
CheegerResult solve_cheeger(const ConvexPolygon& omega, const Anisotropy& k,
                            double eps_root = 1e-12);

FunctionalValues functionals(const ConvexPolygon& omega, const Anisotropy& k,
                             double eps_root = 1e-12);

inline double mahler_volume(const Anisotropy& k) {
  return k.area_body() * k.area_polar();
}

}  // namespace kcheeger
