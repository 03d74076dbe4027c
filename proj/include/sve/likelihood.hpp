#pragma once

#include <cmath>
#include <limits>

#include "sve/errors.hpp"
#include "sve/estimands.hpp"
#include "sve/numerics.hpp"

namespace sve {

/// One evaluation of the profile log-likelihood: the profiled value at
/// candidate SVE = s and the maximizing nuisance risk. For s >= 0 the implied
/// risk pair is (nuisance, nuisance*(1-s)); for s < 0 it is
/// (nuisance*(1+s), nuisance).
struct ProfilePoint {
  double s;
  double loglik;
  double nuisance;
};

struct LrtStatistic {
  double lambda;
  double s;
};

namespace detail {

inline double binom_logterm(long long x, long long n, double p) {
  // 0 * log(0) = 0 by convention; a positive count against probability zero
  // (or a deficit against probability one) makes the likelihood zero.
  double t = 0.0;
  if (x > 0) {
    if (p <= 0.0) return -std::numeric_limits<double>::infinity();
    t += static_cast<double>(x) * std::log(p);
  }
  if (n - x > 0) {
    if (p >= 1.0) return -std::numeric_limits<double>::infinity();
    t += static_cast<double>(n - x) * std::log1p(-p);
  }
  return t;
}

}  // namespace detail

/// Two-arm binomial log-likelihood
///   sum_j { x_j log(p_j) + (n_j - x_j) log(1 - p_j) },
/// with -inf as the zero-likelihood sentinel.
inline double loglik(const TwoArmCounts& c, const RiskPair& r) {
  return detail::binom_logterm(c.x0, c.n0, r.p0) +
         detail::binom_logterm(c.x1, c.n1, r.p1);
}

/// Unconstrained maximum of the log-likelihood, attained at the empirical
/// risks.
inline double max_loglik(const TwoArmCounts& c) {
  return loglik(c, empirical_risks(c));
}

/// Profile log-likelihood at SVE = s: a one-dimensional maximization over the
/// free arm risk under the constraint p1 = p0(1-s) (s >= 0) or p0 = p1(1+s)
/// (s < 0). The constraint keeps the implied second risk inside (0,1)
/// automatically, so the search interval needs no extra clipping.
inline ProfilePoint profile_loglik(const TwoArmCounts& c, double s,
                                   const OptimizerConfig& cfg = {}) {
  if (!(s > -1.0 && s < 1.0))
    throw std::domain_error("profile_loglik: s must be in (-1, 1)");
  constexpr double kInset = 1e-12;
  ScalarMaximum opt =
      (s >= 0.0)
          ? maximize_scalar(
                [&](double p0) { return loglik(c, {p0, p0 * (1.0 - s)}); },
                kInset, 1.0 - kInset, cfg)
          : maximize_scalar(
                [&](double p1) { return loglik(c, {p1 * (1.0 + s), p1}); },
                kInset, 1.0 - kInset, cfg);
  return {s, opt.max, opt.argmax};
}

/// Likelihood ratio statistic Lambda(s) = 2{ l(p0_hat, p1_hat) - l_p(s) }.
/// Nonnegative by construction; optimizer noise in (-1e-8, 0) is clamped to
/// zero and anything more negative signals a broken optimizer.
inline LrtStatistic lrt_statistic(const TwoArmCounts& c, double s,
                                  const OptimizerConfig& cfg = {}) {
  if (c.x0 == 0 && c.x1 == 0)
    throw UndefinedEffectError(
        "LRT undefined: no events in either arm, SVE is not identified");
  const double lmax = max_loglik(c);
  const ProfilePoint pp = profile_loglik(c, s, cfg);
  double lambda = 2.0 * (lmax - pp.loglik);
  if (lambda < 0.0) {
    if (lambda < -1e-8)
      throw NumericError("lrt_statistic: profile exceeded the unconstrained maximum");
    lambda = 0.0;
  }
  return {lambda, s};
}

}  // namespace sve
