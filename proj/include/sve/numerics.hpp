#pragma once

#include <cmath>
#include <limits>
#include <utility>

#include "sve/errors.hpp"

namespace sve {

struct OptimizerConfig {
  double arg_tolerance = 1e-10;
  int max_iterations = 500;
};

struct ScalarMaximum {
  double argmax;
  double max;
  int iterations;
};

/// Brent's derivative-free scalar maximization on the open interval (lo, hi):
/// parabolic interpolation where it helps, golden-section bisection otherwise.
/// -inf function values are treated as strictly worse than any finite value
/// and are never returned as the maximum when a finite value was observed.
template <typename F>
ScalarMaximum maximize_scalar(F&& f, double lo, double hi,
                              const OptimizerConfig& cfg = {}) {
  if (!(lo < hi)) throw NumericError("maximize_scalar: lo must be < hi");
  if (!(cfg.arg_tolerance > 0.0) || cfg.max_iterations < 1)
    throw NumericError("maximize_scalar: bad optimizer config");

  constexpr double kGolden = 0.3819660112501051;  // (3 - sqrt(5)) / 2
  const double sqrt_eps = std::sqrt(std::numeric_limits<double>::epsilon());

  double a = lo, b = hi;
  double x = a + kGolden * (b - a);
  double w = x, v = x;
  double fx = f(x), fw = fx, fv = fx;
  double d = 0.0, e = 0.0;

  for (int iter = 1; iter <= cfg.max_iterations; ++iter) {
    const double m = 0.5 * (a + b);
    const double tol1 = sqrt_eps * std::fabs(x) + cfg.arg_tolerance / 3.0;
    const double tol2 = 2.0 * tol1;
    if (std::fabs(x - m) <= tol2 - 0.5 * (b - a))
      return {x, fx, iter};

    bool take_golden = true;
    if (std::fabs(e) > tol1 && std::isfinite(fx) && std::isfinite(fw) &&
        std::isfinite(fv)) {
      // Trial parabolic step through (v, fv), (w, fw), (x, fx).
      const double r = (x - w) * (fx - fv);
      double q = (x - v) * (fx - fw);
      double p = (x - v) * q - (x - w) * r;
      q = 2.0 * (q - r);
      if (q > 0.0) p = -p;
      q = std::fabs(q);
      const double e_prev = e;
      e = d;
      if (std::fabs(p) < std::fabs(0.5 * q * e_prev) && p > q * (a - x) &&
          p < q * (b - x)) {
        d = p / q;
        const double u_trial = x + d;
        // Keep evaluations away from the interval ends.
        if (u_trial - a < tol2 || b - u_trial < tol2)
          d = (x < m) ? tol1 : -tol1;
        take_golden = false;
      }
    }
    if (take_golden) {
      e = (x < m) ? b - x : a - x;
      d = kGolden * e;
    }

    const double u =
        x + ((std::fabs(d) >= tol1) ? d : (d > 0.0 ? tol1 : -tol1));
    const double fu = f(u);

    if (fu >= fx) {
      if (u < x) b = x; else a = x;
      v = w; fv = fw;
      w = x; fw = fx;
      x = u; fx = fu;
    } else {
      if (u < x) a = u; else b = u;
      if (fu >= fw || w == x) {
        v = w; fv = fw;
        w = u; fw = fu;
      } else if (fu >= fv || v == x || v == w) {
        v = u; fv = fu;
      }
    }
  }
  throw NumericError("maximize_scalar: no convergence within max_iterations");
}

/// Bisection root finding for continuous g with g(lo) * g(hi) <= 0.
/// Terminates once the bracket width is <= tol and returns its midpoint.
template <typename G>
double find_root(G&& g, double lo, double hi, double tol) {
  if (!(lo <= hi)) throw BracketingError("find_root: lo must be <= hi");
  double glo = g(lo);
  if (glo == 0.0) return lo;
  double ghi = g(hi);
  if (ghi == 0.0) return hi;
  if ((glo > 0.0) == (ghi > 0.0))
    throw BracketingError("find_root: no sign change on [lo, hi]");

  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket at floating-point resolution
    const double gm = g(mid);
    if (gm == 0.0) return mid;
    if ((gm > 0.0) == (glo > 0.0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// atanh with an explicit domain guard: |x| >= 1 diverges.
inline double guarded_atanh(double x) {
  if (!(std::fabs(x) < 1.0))
    throw BoundaryError("atanh undefined at |x| >= 1");
  return std::atanh(x);
}

}  // namespace sve
