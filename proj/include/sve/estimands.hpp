#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "sve/errors.hpp"

namespace sve {

/// Event counts and arm sizes of a two-arm trial: arm 0 unvaccinated,
/// arm 1 vaccinated.
struct TwoArmCounts {
  long long x0, n0, x1, n1;

  TwoArmCounts(long long x0_, long long n0_, long long x1_, long long n1_)
      : x0(x0_), n0(n0_), x1(x1_), n1(n1_) {
    if (n0 < 1 || n1 < 1)
      throw std::invalid_argument("TwoArmCounts: arm sizes must be >= 1");
    if (x0 < 0 || x0 > n0 || x1 < 0 || x1 > n1)
      throw std::invalid_argument("TwoArmCounts: counts must satisfy 0 <= x <= n");
  }

  TwoArmCounts swapped() const { return {x1, n1, x0, n0}; }
};

struct RiskPair {
  double p0, p1;

  RiskPair(double p0_, double p1_) : p0(p0_), p1(p1_) {
    if (!(p0 >= 0.0 && p0 <= 1.0 && p1 >= 0.0 && p1 <= 1.0))
      throw std::invalid_argument("RiskPair: risks must be in [0, 1]");
  }
};

enum class EffectKind { VE, SVE, SVE_BC, SVE_FROM_THETA };

/// A point estimate of VE or SVE. `boundary` marks estimates pinned at +-1
/// by a zero-event arm, where atanh-based inference is undefined.
struct EffectEstimate {
  double value;
  EffectKind kind;
  bool boundary = false;
};

/// A multiplicative relative effect (hazard ratio, rate ratio, ...) with the
/// standard error of its logarithm.
struct RelativeEffect {
  double theta_hat;
  double se_log_theta;

  RelativeEffect(double theta, double se) : theta_hat(theta), se_log_theta(se) {
    if (!(theta_hat > 0.0) || !std::isfinite(theta_hat))
      throw std::domain_error("RelativeEffect: theta_hat must be positive");
    if (!(se_log_theta >= 0.0) || !std::isfinite(se_log_theta))
      throw std::domain_error("RelativeEffect: se_log_theta must be >= 0");
  }
};

inline RiskPair empirical_risks(const TwoArmCounts& c) {
  return {static_cast<double>(c.x0) / static_cast<double>(c.n0),
          static_cast<double>(c.x1) / static_cast<double>(c.n1)};
}

/// Traditional vaccine efficacy 1 - p1/p0. Asymmetric: bounded above by 1,
/// unbounded below. Undefined when p0 = 0.
inline EffectEstimate ve_point(const RiskPair& r) {
  if (r.p0 == 0.0)
    throw UndefinedEffectError("VE undefined: risk in the unvaccinated arm is 0");
  return {1.0 - r.p1 / r.p0, EffectKind::VE};
}

/// Symmetric vaccine efficacy (p0 - p1)/max(p0, p1), in [-1, 1].
///
/// Evaluated branch-wise as 1 - p1/p0 (p0 >= p1) and p0/p1 - 1 (p1 > p0) so
/// that it agrees with ve_point bit-for-bit under protection and negates
/// exactly under an arm swap.
inline EffectEstimate sve_point(const RiskPair& r) {
  if (r.p0 == 0.0 && r.p1 == 0.0)
    throw UndefinedEffectError("SVE undefined: both arms have zero risk");
  const bool boundary = (r.p0 == 0.0 || r.p1 == 0.0);
  const double value = (r.p0 >= r.p1) ? 1.0 - r.p1 / r.p0 : r.p0 / r.p1 - 1.0;
  return {value, EffectKind::SVE, boundary};
}

/// Bias-corrected SVE estimator: subtracts the plug-in estimate of the
/// leading finite-sample bias of the ratio. The raw correction can overshoot
/// the parameter space at tiny counts, so the result is clamped to [-1, 1].
inline EffectEstimate sve_bias_corrected(const TwoArmCounts& c) {
  const RiskPair r = empirical_risks(c);
  EffectEstimate est = sve_point(r);
  double value = est.value;
  if (r.p0 > r.p1) {
    value += r.p1 * (1.0 - r.p0) / (static_cast<double>(c.n0) * r.p0 * r.p0);
  } else if (r.p1 > r.p0) {
    value -= r.p0 * (1.0 - r.p1) / (static_cast<double>(c.n1) * r.p1 * r.p1);
  }
  value = std::clamp(value, -1.0, 1.0);
  return {value, EffectKind::SVE_BC, est.boundary};
}

/// SVE implied by a multiplicative relative effect: (1 - theta)/max(1, theta).
/// Strictly decreasing in theta with range (-1, 1); theta = 1 maps to 0.
inline EffectEstimate sve_from_theta(double theta_hat) {
  if (!(theta_hat > 0.0) || !std::isfinite(theta_hat))
    throw std::domain_error("sve_from_theta: theta must be positive");
  const double value =
      (theta_hat <= 1.0) ? 1.0 - theta_hat : (1.0 - theta_hat) / theta_hat;
  return {value, EffectKind::SVE_FROM_THETA};
}

inline EffectEstimate sve_from_theta(const RelativeEffect& e) {
  return sve_from_theta(e.theta_hat);
}

/// Inverse of sve_from_theta on (-1, 1).
inline double theta_from_sve(double s) {
  if (!(s > -1.0 && s < 1.0))
    throw std::domain_error("theta_from_sve: s must be in (-1, 1)");
  return (s >= 0.0) ? 1.0 - s : 1.0 / (1.0 + s);
}

}  // namespace sve
