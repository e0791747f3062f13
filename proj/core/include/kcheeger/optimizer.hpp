#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kcheeger/polygon.hpp"

// minimization of J over centrally symmetric polygonal anisotropies with a
// fixed number of vertex pairs
namespace kcheeger::optimizer {

// vertex pairs +-(r_i cos a_i, r_i sin a_i); one radius and angle per pair
struct Params {
  std::vector<double> radii;
  std::vector<double> angles;
};

struct Options {
  int starts = 8;
  long long budget = 2000;  // objective evaluations per start
  std::uint64_t seed = 0;
  int threads = 1;
  double r_min = 1e-3;
  double r_max = 1e3;
  double spread_tol = 1e-8;
  double eps_root = 1e-12;
  bool record_trace = false;
};

struct TraceEntry {
  int start = 0;
  long long eval = 0;  // evaluation count within the start when the value improved
  double j = 0.0;
  Params params;
};

struct Result {
  Params best;  // angles wrapped to [0, pi) and sorted, radii permuted along
  double best_j = 0.0;
  long long evaluations = 0;
  bool converged = false;  // every start met the spread tolerance within budget
  int best_start = 0;
  std::vector<TraceEntry> trace;
};

ConvexPolygon params_polygon(const Params& p);

// J of the anisotropy described by params, for this omega
double objective(const ConvexPolygon& omega, const Params& p, double eps_root = 1e-12);

// multi start Nelder-Mead over pairs vertex pairs; deterministic for a fixed
// seed regardless of thread count
Result minimize(const ConvexPolygon& omega, int pairs, const Options& opt);

// J along a family of area one rectangles with the given aspect ratios,
// degenerating as the aspect grows
std::vector<double> divergence_probe(const ConvexPolygon& omega, std::span<const double> aspects,
                                     double eps_root = 1e-12);

}  // namespace kcheeger::optimizer
