#include "kcheeger/cheeger.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "kcheeger/error.hpp"
#include "kcheeger/halfplane.hpp"

namespace kcheeger {

namespace {

// Preprocessed erosion state: the sorted half planes of omega and the support
// cost of each normal are fixed across the bisection, only offsets move.
struct ErosionProfile {
  std::vector<HalfPlane> base;
  std::vector<double> cost;
  double area_k = 0.0;

  // scratch reused between evaluations
  std::vector<HalfPlane> shifted;
  std::vector<Point2> ring;
  bool last_empty = true;

  ErosionProfile(const ConvexPolygon& omega, const Anisotropy& k) {
    base = detail::sorted_halfplanes(edge_halfplanes(omega));
    cost.reserve(base.size());
    for (const HalfPlane& h : base) cost.push_back(k.support(h.normal));
    area_k = k.area_body();
    shifted.resize(base.size());
  }

  // deficit f(rho); empty erosion counts as zero area
  double deficit(double rho) {
    for (std::size_t i = 0; i < base.size(); ++i)
      shifted[i] = HalfPlane{base[i].normal, base[i].offset - rho * cost[i]};
    double area = 0.0;
    last_empty = !detail::intersect_sorted_ring(shifted, ring);
    if (!last_empty) area = ring_area(ring);
    return area - rho * rho * area_k;
  }
};

}  // namespace

double rho_deficit(const ConvexPolygon& omega, const Anisotropy& k, double rho) {
  if (!std::isfinite(rho)) throw Error(ErrorCode::non_finite, "rho is not finite");
  if (rho < 0.0) throw Error(ErrorCode::negative_rho, "rho is negative");
  ErosionProfile profile(omega, k);
  return profile.deficit(rho);
}

CheegerResult solve_cheeger(const ConvexPolygon& omega, const Anisotropy& k, double eps_root) {
  if (!(eps_root > 0.0) || !std::isfinite(eps_root))
    throw Error(ErrorCode::bad_parameter, "eps_root must be positive and finite");

  ErosionProfile profile(omega, k);
  const double area_omega = omega.area();
  const double tol = eps_root * area_omega;

  double lo = 0.0;  // f(0) = |omega| > 0
  double hi = std::sqrt(area_omega / profile.area_k);
  double f_hi = profile.deficit(hi);
  for (int i = 0; i < 60 && f_hi > 0.0; ++i) {
    lo = hi;
    hi *= 2.0;
    f_hi = profile.deficit(hi);
  }
  if (f_hi > 0.0) throw Error(ErrorCode::no_bracket, "failed to bracket the deficit root");

  double rho = hi;
  double f = f_hi;
  for (int i = 0; i < 200 && std::abs(f) > tol; ++i) {
    rho = 0.5 * (lo + hi);
    f = profile.deficit(rho);
    if (f > 0.0)
      lo = rho;
    else
      hi = rho;
    if (hi - lo <= rho * 1e-17) break;
  }
  if (std::abs(f) > tol)
    throw Error(ErrorCode::tolerance_not_met, "deficit bisection stalled above tolerance");

  // refresh the ring at the accepted rho
  f = profile.deficit(rho);
  if (profile.last_empty)
    throw Error(ErrorCode::tolerance_not_met, "inner body vanished at the accepted rho");

  CheegerResult out;
  out.rho = rho;
  out.h = 1.0 / rho;
  out.residual = std::abs(f);
  out.inner_body = make_polygon(profile.ring);
  out.cheeger_set = minkowski_sum(out.inner_body, k.body().scaled(rho));
  return out;
}

FunctionalValues functionals(const ConvexPolygon& omega, const Anisotropy& k, double eps_root) {
  CheegerResult r = solve_cheeger(omega, k, eps_root);
  FunctionalValues v;
  v.h = r.h;
  v.F = r.h / std::sqrt(k.area_body());
  v.J = r.h * std::sqrt(k.area_polar());
  v.mahler = mahler_volume(k);
  return v;
}

}  // namespace kcheeger
