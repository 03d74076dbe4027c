#pragma once

#include <cmath>

#include "sve/errors.hpp"
#include "sve/estimands.hpp"

namespace sve {

enum class VarianceScale { Original, Atanh, Theta };

/// Delta-method variance of the SVE estimator on one of three scales.
/// `boundary_adjacent` marks values computed from a zero-event arm, where
/// the plug-in formula degenerates and coverage guarantees fail.
struct VarianceEstimate {
  double value;
  VarianceScale scale;
  bool boundary_adjacent = false;
};

/// Per-arm binomial variances sigma_j^2 = p_j(1 - p_j)/n_j at the
/// empirical risks.
struct ArmVariance {
  double sigma0_sq;
  double sigma1_sq;
};

inline ArmVariance arm_variances(const TwoArmCounts& c) {
  const RiskPair r = empirical_risks(c);
  return {r.p0 * (1.0 - r.p0) / static_cast<double>(c.n0),
          r.p1 * (1.0 - r.p1) / static_cast<double>(c.n1)};
}

/// Plug-in delta-method variance of the SVE estimator,
/// (p1^2 sigma0^2 + p0^2 sigma1^2) / max(p0, p1)^4,
/// evaluated with a single max() denominator; the gradient of the estimand is
/// continuous across p0 = p1 so no branch split is needed.
inline VarianceEstimate sve_variance(const TwoArmCounts& c) {
  const RiskPair r = empirical_risks(c);
  if (r.p0 == 0.0 && r.p1 == 0.0)
    throw UndefinedVarianceError("SVE variance undefined: both risks are zero");
  const ArmVariance av = arm_variances(c);
  const double m = std::max(r.p0, r.p1);
  const double m2 = m * m;
  const double value =
      (r.p1 * r.p1 * av.sigma0_sq + r.p0 * r.p0 * av.sigma1_sq) / (m2 * m2);
  const bool boundary = (r.p0 == 0.0 || r.p1 == 0.0);
  return {value, VarianceScale::Original, boundary};
}

/// Variance of atanh(SVE_hat) by one more delta-method step:
/// Var(SVE_hat) / (1 - SVE_hat^2)^2. Diverges at a boundary estimate.
inline VarianceEstimate atanh_variance(const TwoArmCounts& c) {
  const VarianceEstimate base = sve_variance(c);
  const double s = sve_point(empirical_risks(c)).value;
  const double one_minus_s2 = 1.0 - s * s;
  if (one_minus_s2 <= 0.0)
    throw BoundaryError(
        "atanh variance diverges at SVE_hat = +-1; use the profile interval");
  return {base.value / (one_minus_s2 * one_minus_s2), VarianceScale::Atanh,
          base.boundary_adjacent};
}

/// Variance of the SVE implied by a relative effect, from the log-scale
/// delta method: Var(log theta_hat) / max(theta_hat, 1/theta_hat)^2.
/// Symmetric under theta <-> 1/theta; reduces to Var(log theta_hat) at 1.
inline VarianceEstimate sve_variance_from_theta(const RelativeEffect& e) {
  const double m = std::max(e.theta_hat, 1.0 / e.theta_hat);
  const double var_phi = e.se_log_theta * e.se_log_theta;
  return {var_phi / (m * m), VarianceScale::Theta};
}

}  // namespace sve
