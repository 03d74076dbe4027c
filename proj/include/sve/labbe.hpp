#pragma once

#include <stdexcept>
#include <vector>

namespace sve {

/// One point of an iso-effect curve in the (p0, p1) risk plane.
struct LabbePoint {
  double s;
  double p0;
  double p1;
};

/// Iso-effect curve data for L'Abbe plots: for each effect size s the locus
/// of risk pairs with SVE = s, namely p1 = (1-s) p0 for s >= 0 and
/// p1 = p0 / (1+s) for s < 0. p0 runs over a uniform interior grid of (0, 1);
/// points whose implied p1 would leave [0, 1] (harmful curves near the top
/// edge) are not emitted.
inline std::vector<LabbePoint> labbe_points(const std::vector<double>& effect_sizes,
                                            int points_per_curve) {
  if (points_per_curve < 2)
    throw std::invalid_argument("labbe_points: need at least 2 points per curve");
  for (double s : effect_sizes)
    if (!(s > -1.0 && s < 1.0))
      throw std::domain_error("labbe_points: effect sizes must be in (-1, 1)");

  std::vector<LabbePoint> out;
  out.reserve(effect_sizes.size() * static_cast<std::size_t>(points_per_curve));
  for (double s : effect_sizes) {
    for (int i = 1; i <= points_per_curve; ++i) {
      const double p0 = static_cast<double>(i) / (points_per_curve + 1.0);
      const double p1 = (s >= 0.0) ? (1.0 - s) * p0 : p0 / (1.0 + s);
      if (p1 > 1.0) continue;
      out.push_back({s, p0, p1});
    }
  }
  return out;
}

}  // namespace sve
