#include "kcheeger/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>
#include <utility>

#include "kcheeger/anisotropy.hpp"
#include "kcheeger/cheeger.hpp"
#include "kcheeger/error.hpp"

namespace kcheeger::optimizer {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kInf = std::numeric_limits<double>::infinity();

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// free coordinates: pairs-1 log radius ratios (the first radius is the scale
// gauge, pinned to 1), then pairs vertex angles
struct Decoder {
  int pairs = 0;
  double log_r_min = 0.0;
  double log_r_max = 0.0;

  Params decode(const std::vector<double>& z) const {
    Params p;
    p.radii.resize(pairs, 1.0);
    p.angles.resize(pairs);
    for (int i = 1; i < pairs; ++i)
      p.radii[i] = std::exp(std::clamp(z[i - 1], log_r_min, log_r_max));
    for (int i = 0; i < pairs; ++i) p.angles[i] = z[pairs - 1 + i];
    return p;
  }
};

struct StartOutcome {
  std::vector<double> best_z;
  double best_f = kInf;
  long long evals = 0;
  bool converged = false;
  std::vector<TraceEntry> trace;
};

StartOutcome run_start(const ConvexPolygon& omega, const Decoder& dec, int start,
                       const Options& opt) {
  const int d = 2 * dec.pairs - 1;
  std::mt19937_64 rng(splitmix64(splitmix64(opt.seed) ^ static_cast<std::uint64_t>(start + 1)));
  auto unit = [&rng]() { return (rng() >> 11) * 0x1.0p-53; };

  StartOutcome out;
  auto eval = [&](const std::vector<double>& z) {
    ++out.evals;
    double f = kInf;
    try {
      f = objective(omega, dec.decode(z), opt.eps_root);
    } catch (const Error&) {
    }
    if (f < out.best_f) {
      out.best_f = f;
      out.best_z = z;
      if (opt.record_trace) out.trace.push_back(TraceEntry{start, out.evals, f, dec.decode(z)});
    }
    return f;
  };
  auto spent = [&]() { return out.evals >= opt.budget; };

  std::vector<double> x0(d, 0.0);
  if (start == 0) {
    for (int i = 0; i < dec.pairs; ++i)
      x0[dec.pairs - 1 + i] = kPi / (2.0 * dec.pairs) + kPi * i / dec.pairs;
  } else {
    for (int tries = 0; tries < 32; ++tries) {
      for (int i = 0; i < dec.pairs - 1; ++i) x0[i] = (2.0 * unit() - 1.0) * 0.7;
      for (int i = 0; i < dec.pairs; ++i) x0[dec.pairs - 1 + i] = kPi * unit();
      if (std::isfinite(eval(x0)) || spent()) break;
    }
  }

  std::vector<std::vector<double>> simplex(d + 1, x0);
  std::vector<double> f(d + 1);
  for (int i = 0; i < d; ++i) simplex[i + 1][i] += 0.25;
  for (int i = 0; i <= d; ++i) f[i] = eval(simplex[i]);

  std::vector<int> order(d + 1);
  while (!spent()) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return f[a] != f[b] ? f[a] < f[b] : a < b; });
    const int best = order[0];
    const int worst = order[d];
    const int second = order[d - 1];

    if (std::isfinite(f[best]) &&
        f[worst] - f[best] <= opt.spread_tol * std::max(1.0, std::abs(f[best]))) {
      out.converged = true;
      break;
    }

    std::vector<double> centroid(d, 0.0);
    for (int i = 0; i <= d; ++i) {
      if (i == worst) continue;
      for (int j = 0; j < d; ++j) centroid[j] += simplex[i][j];
    }
    for (double& c : centroid) c /= d;

    std::vector<double> xr(d);
    for (int j = 0; j < d; ++j) xr[j] = 2.0 * centroid[j] - simplex[worst][j];
    const double fr = eval(xr);

    if (fr < f[best]) {
      if (spent()) {
        simplex[worst] = xr;
        f[worst] = fr;
        break;
      }
      std::vector<double> xe(d);
      for (int j = 0; j < d; ++j) xe[j] = 3.0 * centroid[j] - 2.0 * simplex[worst][j];
      const double fe = eval(xe);
      if (fe < fr) {
        simplex[worst] = std::move(xe);
        f[worst] = fe;
      } else {
        simplex[worst] = std::move(xr);
        f[worst] = fr;
      }
    } else if (fr < f[second]) {
      simplex[worst] = std::move(xr);
      f[worst] = fr;
    } else {
      if (spent()) break;
      std::vector<double> xc(d);
      if (fr < f[worst]) {
        for (int j = 0; j < d; ++j) xc[j] = centroid[j] + 0.5 * (xr[j] - centroid[j]);
        const double fc = eval(xc);
        if (fc <= fr) {
          simplex[worst] = std::move(xc);
          f[worst] = fc;
          continue;
        }
      } else {
        for (int j = 0; j < d; ++j) xc[j] = centroid[j] + 0.5 * (simplex[worst][j] - centroid[j]);
        const double fc = eval(xc);
        if (fc < f[worst]) {
          simplex[worst] = std::move(xc);
          f[worst] = fc;
          continue;
        }
      }
      for (int i = 0; i <= d; ++i) {
        if (i == best || spent()) continue;
        for (int j = 0; j < d; ++j)
          simplex[i][j] = simplex[best][j] + 0.5 * (simplex[i][j] - simplex[best][j]);
        f[i] = eval(simplex[i]);
      }
    }
  }
  return out;
}

Params canonical(Params p) {
  const std::size_t n = p.radii.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  for (double& a : p.angles) {
    a = std::fmod(a, kPi);
    if (a < 0.0) a += kPi;
  }
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (p.angles[a] != p.angles[b]) return p.angles[a] < p.angles[b];
    return p.radii[a] < p.radii[b];
  });
  Params q;
  q.radii.reserve(n);
  q.angles.reserve(n);
  for (std::size_t i : idx) {
    q.radii.push_back(p.radii[i]);
    q.angles.push_back(p.angles[i]);
  }
  return q;
}

}  // namespace

ConvexPolygon params_polygon(const Params& p) {
  const std::size_t n = p.radii.size();
  if (n < 2 || p.angles.size() != n)
    throw Error(ErrorCode::bad_parameter, "need matching radii and angles for at least two pairs");
  std::vector<Point2> pts;
  pts.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = p.radii[i];
    const double a = p.angles[i];
    if (!std::isfinite(r) || !std::isfinite(a))
      throw Error(ErrorCode::non_finite, "vertex pair parameters are not finite");
    if (r <= 0.0) throw Error(ErrorCode::bad_parameter, "vertex pair radius must be positive");
    const Point2 v{r * std::cos(a), r * std::sin(a)};
    pts.push_back(v);
    pts.push_back(-v);
  }
  try {
    return make_polygon(pts);
  } catch (const Error&) {
    throw Error(ErrorCode::params_degenerate, "vertex pairs collapse to a degenerate polygon");
  }
}

double objective(const ConvexPolygon& omega, const Params& p, double eps_root) {
  Anisotropy k(params_polygon(p));
  return functionals(omega, k, eps_root).J;
}

Result minimize(const ConvexPolygon& omega, int pairs, const Options& opt) {
  if (pairs < 2) throw Error(ErrorCode::bad_parameter, "need at least two vertex pairs");
  if (opt.starts < 1) throw Error(ErrorCode::bad_parameter, "need at least one start");
  const int d = 2 * pairs - 1;
  if (opt.budget < d + 2) throw Error(ErrorCode::bad_parameter, "budget too small for a simplex");
  if (!(opt.r_min > 0.0) || !(opt.r_max > opt.r_min) || !std::isfinite(opt.r_max))
    throw Error(ErrorCode::bad_parameter, "radius box must satisfy 0 < r_min < r_max");
  if (!(opt.spread_tol > 0.0) || !(opt.eps_root > 0.0))
    throw Error(ErrorCode::bad_parameter, "tolerances must be positive");
  if (opt.threads < 1) throw Error(ErrorCode::bad_parameter, "thread count must be positive");

  Decoder dec{pairs, std::log(opt.r_min), std::log(opt.r_max)};
  std::vector<StartOutcome> outcomes(opt.starts);

  const int workers = std::min(opt.threads, opt.starts);
  if (workers <= 1) {
    for (int s = 0; s < opt.starts; ++s) outcomes[s] = run_start(omega, dec, s, opt);
  } else {
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&]() {
        for (int s = next.fetch_add(1); s < opt.starts; s = next.fetch_add(1)) {
          try {
            outcomes[s] = run_start(omega, dec, s, opt);
          } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  Result out;
  out.best_j = kInf;
  for (int s = 0; s < opt.starts; ++s) {
    const StartOutcome& o = outcomes[s];
    out.evaluations += o.evals;
    if (o.best_f < out.best_j) {
      out.best_j = o.best_f;
      out.best_start = s;
    }
    if (opt.record_trace)
      out.trace.insert(out.trace.end(), o.trace.begin(), o.trace.end());
  }
  out.converged = std::all_of(outcomes.begin(), outcomes.end(),
                              [](const StartOutcome& o) { return o.converged; });
  if (!std::isfinite(out.best_j))
    throw Error(ErrorCode::tolerance_not_met, "no start produced a finite objective value");
  out.best = canonical(dec.decode(outcomes[out.best_start].best_z));
  return out;
}

std::vector<double> divergence_probe(const ConvexPolygon& omega, std::span<const double> aspects,
                                     double eps_root) {
  std::vector<double> js;
  js.reserve(aspects.size());
  for (double a : aspects) {
    if (!std::isfinite(a) || a < 1.0)
      throw Error(ErrorCode::bad_parameter, "aspect ratios must be at least 1");
    const double w = 0.5 * std::sqrt(a);
    const double h = 0.25 / w;
    const Point2 box[] = {{w, h}, {-w, h}, {-w, -h}, {w, -h}};
    Anisotropy k(make_polygon(box));
    js.push_back(functionals(omega, k, eps_root).J);
  }
  return js;
}

}  // namespace kcheeger::optimizer
