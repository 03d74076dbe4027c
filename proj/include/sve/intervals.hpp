#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "sve/errors.hpp"
#include "sve/estimands.hpp"
#include "sve/likelihood.hpp"
#include "sve/numerics.hpp"
#include "sve/quantiles.hpp"
#include "sve/variance.hpp"

namespace sve {

enum class CiMethod { Wald, TanhWald, Profile };

inline const char* method_name(CiMethod m) {
  switch (m) {
    case CiMethod::Wald: return "Wald";
    case CiMethod::TanhWald: return "tanh-Wald";
    case CiMethod::Profile: return "Profile";
  }
  return "?";
}

struct ConfidenceInterval {
  double lower;
  double upper;
  double level;
  CiMethod method;
  // Endpoints pinned at -1 / +1 on the closed parameter space.
  bool lower_at_boundary = false;
  bool upper_at_boundary = false;
  // Non-empty when the profile scan saw more than one threshold crossing.
  std::string warning;
};

namespace detail {

inline void check_level(double level) {
  if (!(level > 0.0 && level < 1.0))
    throw std::invalid_argument("confidence level must be in (0, 1)");
}

}  // namespace detail

/// Wald interval on the original SVE scale. Deliberately not clipped to
/// [-1, 1]: near the boundary or in small samples it can spill outside the
/// parameter space, which is exactly the behavior the transformed and
/// profile intervals are there to fix.
inline ConfidenceInterval wald_ci(const TwoArmCounts& c, double level = 0.95) {
  detail::check_level(level);
  const EffectEstimate est = sve_point(empirical_risks(c));
  const VarianceEstimate var = sve_variance(c);
  const double half = normal_quantile(0.5 * (1.0 + level)) * std::sqrt(var.value);
  ConfidenceInterval ci{est.value - half, est.value + half, level, CiMethod::Wald};
  ci.lower_at_boundary = var.boundary_adjacent && ci.lower == est.value;
  ci.upper_at_boundary = var.boundary_adjacent && ci.upper == est.value;
  return ci;
}

/// Wald interval built on atanh(SVE_hat) and mapped back through tanh;
/// endpoints are strictly inside (-1, 1). Refuses boundary estimates, where
/// the transform diverges; the profile interval still applies there.
inline ConfidenceInterval tanh_wald_ci(const TwoArmCounts& c,
                                       double level = 0.95) {
  detail::check_level(level);
  const EffectEstimate est = sve_point(empirical_risks(c));
  const double u = guarded_atanh(est.value);
  const VarianceEstimate var_u = atanh_variance(c);
  const double half = normal_quantile(0.5 * (1.0 + level)) * std::sqrt(var_u.value);
  return {std::tanh(u - half), std::tanh(u + half), level, CiMethod::TanhWald};
}

/// Profile likelihood interval { s : Lambda(s) <= chi2_{1,level} }.
///
/// From SVE_hat, each side is scanned to the boundary in 0.01 steps; the
/// outermost crossing of the threshold is then bisected to 1e-6 in s. If the
/// statistic stays below the threshold all the way out, the endpoint is the
/// closed-range boundary -1 or +1 with its boundary flag set. More than one
/// crossing on a side (never observed; the statistic is unimodal in practice)
/// is reported through `warning`.
inline ConfidenceInterval profile_ci(const TwoArmCounts& c, double level = 0.95,
                                     const OptimizerConfig& cfg = {}) {
  detail::check_level(level);
  const double s_hat = sve_point(empirical_risks(c)).value;
  const double threshold = chi2_1_quantile(level);
  const auto excess = [&](double s) {
    return lrt_statistic(c, s, cfg).lambda - threshold;
  };

  constexpr double kStep = 0.01;
  constexpr double kBound = 1.0 - 1e-9;
  constexpr double kEndpointTol = 1e-6;

  const double start = std::clamp(s_hat, -kBound, kBound);
  const double g_start = excess(start);

  struct Endpoint {
    double value;
    bool at_boundary;
    int crossings;
  };

  const auto scan_side = [&](double dir) -> Endpoint {
    if (g_start > 0.0) return {start, false, 0};  // degenerate level
    const double bound = dir * kBound;
    double s_prev = start, g_prev = g_start;
    double bracket_lo = 0.0, bracket_hi = 0.0;
    int crossings = 0;
    for (int k = 1;; ++k) {
      double s_next = start + dir * kStep * k;
      const bool last = (dir > 0.0) ? (s_next >= bound) : (s_next <= bound);
      if (last) s_next = bound;
      const double g_next = excess(s_next);
      if ((g_prev <= 0.0) != (g_next <= 0.0)) {
        ++crossings;
        if (g_next > 0.0) {  // outward crossing of the threshold
          bracket_lo = s_prev;
          bracket_hi = s_next;
        }
      }
      if (last) {
        if (g_next <= 0.0)
          return {dir > 0.0 ? 1.0 : -1.0, true, crossings};
        const double root = find_root(excess, std::min(bracket_lo, bracket_hi),
                                      std::max(bracket_lo, bracket_hi),
                                      kEndpointTol);
        return {root, false, crossings};
      }
      s_prev = s_next;
      g_prev = g_next;
    }
  };

  const Endpoint lo = scan_side(-1.0);
  const Endpoint hi = scan_side(+1.0);
  ConfidenceInterval ci{lo.value, hi.value, level, CiMethod::Profile,
                        lo.at_boundary, hi.at_boundary};
  if (lo.crossings > 1 || hi.crossings > 1)
    ci.warning = "profile statistic crossed the threshold more than once; "
                 "outermost crossing reported";
  return ci;
}

/// Wald interval for the SVE implied by a relative effect measure, using the
/// log-scale delta-method variance. Like wald_ci, not clipped.
inline ConfidenceInterval theta_wald_ci(const RelativeEffect& e,
                                        double level = 0.95) {
  detail::check_level(level);
  const double est = sve_from_theta(e).value;
  const VarianceEstimate var = sve_variance_from_theta(e);
  const double half = normal_quantile(0.5 * (1.0 + level)) * std::sqrt(var.value);
  return {est - half, est + half, level, CiMethod::Wald};
}

/// Maps a confidence interval for theta onto the SVE scale endpoint-wise.
/// The map theta -> SVE is strictly decreasing, so the endpoints swap.
inline std::pair<double, double> theta_ci_transform(double theta_lower,
                                                    double theta_upper) {
  if (!(theta_lower > 0.0) || !(theta_upper > 0.0))
    throw std::domain_error("theta_ci_transform: endpoints must be positive");
  if (!(theta_lower <= theta_upper))
    throw std::domain_error("theta_ci_transform: lower must be <= upper");
  return {sve_from_theta(theta_upper).value, sve_from_theta(theta_lower).value};
}

/// Wald interval for traditional VE on the log relative-risk scale
/// (the usual Katz interval), the comparator reported alongside SVE.
/// Requires at least one event in each arm.
inline ConfidenceInterval ve_wald_ci(const TwoArmCounts& c, double level = 0.95) {
  detail::check_level(level);
  const RiskPair r = empirical_risks(c);
  if (r.p0 == 0.0)
    throw UndefinedEffectError("VE undefined: risk in the unvaccinated arm is 0");
  if (c.x1 == 0)
    throw BoundaryError("VE log-RR interval undefined with zero events in the vaccinated arm");
  const double log_rr = std::log(r.p1 / r.p0);
  const double se = std::sqrt(1.0 / static_cast<double>(c.x1) -
                              1.0 / static_cast<double>(c.n1) +
                              1.0 / static_cast<double>(c.x0) -
                              1.0 / static_cast<double>(c.n0));
  const double z = normal_quantile(0.5 * (1.0 + level));
  return {1.0 - std::exp(log_rr + z * se), 1.0 - std::exp(log_rr - z * se),
          level, CiMethod::Wald};
}

}  // namespace sve
