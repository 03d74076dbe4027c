#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "sve/estimands.hpp"
#include "sve/intervals.hpp"
#include "sve/rng.hpp"
#include "sve/variance.hpp"

namespace sve {

/// One Monte Carlo cell: true risks, arm sizes, and the interval methods to
/// score. Replicate draws depend only on (master_seed, p0, p1, n0, n1,
/// replicate index), never on the requested methods, level, or list order.
struct Scenario {
  double p0;
  double p1;
  long long n0;
  long long n1;
  long long replicates = 10000;
  double level = 0.95;
  std::vector<CiMethod> methods = {CiMethod::Profile, CiMethod::Wald,
                                   CiMethod::TanhWald};
  std::uint64_t master_seed = 0;
};

inline void validate_scenario(const Scenario& sc) {
  if (!(sc.p0 > 0.0 && sc.p0 < 1.0 && sc.p1 > 0.0 && sc.p1 < 1.0))
    throw std::invalid_argument("scenario: true risks must be in (0, 1)");
  if (sc.n0 < 1 || sc.n1 < 1)
    throw std::invalid_argument("scenario: arm sizes must be >= 1");
  if (sc.replicates < 1)
    throw std::invalid_argument("scenario: replicates must be >= 1");
  if (!(sc.level > 0.0 && sc.level < 1.0))
    throw std::invalid_argument("scenario: level must be in (0, 1)");
  if (sc.methods.size() > 8)
    throw std::invalid_argument("scenario: too many methods");
}

/// Stream key of a scenario, a chain hash of its defining parameters. Two
/// scenarios with the same (p0, p1, n0, n1) replay identical data whatever
/// else differs, which makes grid results order-independent.
inline std::uint64_t scenario_key(const Scenario& sc) {
  std::uint64_t k = 0x243F6A8885A308D3ULL;
  k = mix64(k ^ static_cast<std::uint64_t>(sc.n0));
  k = mix64(k ^ static_cast<std::uint64_t>(sc.n1));
  k = mix64(k ^ std::bit_cast<std::uint64_t>(sc.p0));
  k = mix64(k ^ std::bit_cast<std::uint64_t>(sc.p1));
  return k;
}

struct MethodStats {
  CiMethod method;
  double coverage = 0.0;
  std::optional<double> type_i_error;  // populated iff p0 == p1
  double mean_width_sve = 0.0;
  long long ci_failures = 0;  // intervals undefined at a boundary estimate
};

struct SimulationReport {
  Scenario scenario;
  double true_sve = 0.0;
  long long defined = 0;          // replicates with at least one event
  long long undefined_count = 0;  // both arms event-free, excluded everywhere
  double bias = 0.0;
  double bias_bc = 0.0;
  double empirical_se = 0.0;
  double mean_estimated_se = 0.0;
  double mean_width_ve = 0.0;
  long long ve_undefined = 0;  // zero-event arm, log-RR interval unavailable
  std::vector<MethodStats> method_stats;
};

namespace detail {

struct MethodOutcome {
  bool ok = false;
  bool covered = false;
  bool rejected = false;
  double width = 0.0;
};

struct ReplicateOutcome {
  bool defined = false;
  double est = 0.0;
  double est_bc = 0.0;
  double est_se = 0.0;
  bool ve_ok = false;
  double ve_width = 0.0;
  MethodOutcome per_method[8];
};

inline ReplicateOutcome run_replicate(const Scenario& sc, std::uint64_t key,
                                      long long r, double true_sve) {
  ReplicateOutcome out;
  CounterRng rng(sc.master_seed, mix64(key + static_cast<std::uint64_t>(r)));
  const long long x0 = binomial_sample(sc.n0, sc.p0, rng);
  const long long x1 = binomial_sample(sc.n1, sc.p1, rng);
  if (x0 == 0 && x1 == 0) return out;  // estimand undefined for this draw
  out.defined = true;

  const TwoArmCounts counts{x0, sc.n0, x1, sc.n1};
  const RiskPair risks = empirical_risks(counts);
  out.est = sve_point(risks).value;
  out.est_bc = sve_bias_corrected(counts).value;
  out.est_se = std::sqrt(sve_variance(counts).value);

  if (x0 > 0 && x1 > 0) {
    const ConfidenceInterval ve = ve_wald_ci(counts, sc.level);
    out.ve_ok = true;
    out.ve_width = ve.upper - ve.lower;
  }

  for (std::size_t m = 0; m < sc.methods.size(); ++m) {
    MethodOutcome& mo = out.per_method[m];
    try {
      ConfidenceInterval ci;
      switch (sc.methods[m]) {
        case CiMethod::Wald: ci = wald_ci(counts, sc.level); break;
        case CiMethod::TanhWald: ci = tanh_wald_ci(counts, sc.level); break;
        case CiMethod::Profile: ci = profile_ci(counts, sc.level); break;
      }
      mo.ok = true;
      mo.covered = (ci.lower <= true_sve && true_sve <= ci.upper);
      mo.rejected = (ci.lower > 0.0 || ci.upper < 0.0);
      mo.width = ci.upper - ci.lower;
    } catch (const BoundaryError&) {
      // tanh-Wald at a boundary estimate: scored non-covering / rejecting.
      mo.ok = false;
      mo.covered = false;
      mo.rejected = true;
    }
  }
  return out;
}

}  // namespace detail

/// Runs one scenario. Replicates are independent work units and may be
/// computed on `threads` threads; results are reduced in replicate order, so
/// the report is byte-identical for every thread count.
inline SimulationReport run_scenario(const Scenario& sc, int threads = 1) {
  validate_scenario(sc);
  const double true_sve = sve_point({sc.p0, sc.p1}).value;
  const std::uint64_t key = scenario_key(sc);
  const long long reps = sc.replicates;

  std::vector<detail::ReplicateOutcome> outcomes(
      static_cast<std::size_t>(reps));
  if (threads <= 1) {
    for (long long r = 0; r < reps; ++r)
      outcomes[static_cast<std::size_t>(r)] =
          detail::run_replicate(sc, key, r, true_sve);
  } else {
    const long long chunk = (reps + threads - 1) / threads;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
      const long long lo = t * chunk;
      const long long hi = std::min(reps, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back([&, lo, hi] {
        for (long long r = lo; r < hi; ++r)
          outcomes[static_cast<std::size_t>(r)] =
              detail::run_replicate(sc, key, r, true_sve);
      });
    }
    for (auto& th : pool) th.join();
  }

  SimulationReport rep;
  rep.scenario = sc;
  rep.true_sve = true_sve;

  double sum_est = 0.0, sum_bc = 0.0, sum_se = 0.0, sum_ve_width = 0.0;
  long long ve_ok = 0;
  for (const auto& o : outcomes) {
    if (!o.defined) {
      ++rep.undefined_count;
      continue;
    }
    ++rep.defined;
    sum_est += o.est;
    sum_bc += o.est_bc;
    sum_se += o.est_se;
    if (o.ve_ok) {
      ++ve_ok;
      sum_ve_width += o.ve_width;
    }
  }
  rep.ve_undefined = rep.defined - ve_ok;
  if (rep.defined > 0) {
    const double mean_est = sum_est / static_cast<double>(rep.defined);
    rep.bias = mean_est - true_sve;
    rep.bias_bc = sum_bc / static_cast<double>(rep.defined) - true_sve;
    rep.mean_estimated_se = sum_se / static_cast<double>(rep.defined);
    double ss = 0.0;
    for (const auto& o : outcomes)
      if (o.defined) ss += (o.est - mean_est) * (o.est - mean_est);
    rep.empirical_se =
        (rep.defined > 1)
            ? std::sqrt(ss / static_cast<double>(rep.defined - 1))
            : 0.0;
  }
  if (ve_ok > 0) rep.mean_width_ve = sum_ve_width / static_cast<double>(ve_ok);

  const bool is_null = (sc.p0 == sc.p1);
  for (std::size_t m = 0; m < sc.methods.size(); ++m) {
    MethodStats ms;
    ms.method = sc.methods[m];
    long long covered = 0, rejected = 0, ok = 0;
    double sum_width = 0.0;
    for (const auto& o : outcomes) {
      if (!o.defined) continue;
      const detail::MethodOutcome& mo = o.per_method[m];
      if (mo.covered) ++covered;
      if (mo.rejected) ++rejected;
      if (mo.ok) {
        ++ok;
        sum_width += mo.width;
      }
    }
    if (rep.defined > 0) {
      ms.coverage = static_cast<double>(covered) / static_cast<double>(rep.defined);
      if (is_null)
        ms.type_i_error =
            static_cast<double>(rejected) / static_cast<double>(rep.defined);
    }
    ms.ci_failures = rep.defined - ok;
    if (ok > 0) ms.mean_width_sve = sum_width / static_cast<double>(ok);
    rep.method_stats.push_back(ms);
  }
  return rep;
}

/// Element-wise run_scenario; scenarios are seeded from their own parameters,
/// so permuting the list permutes the reports and nothing else.
inline std::vector<SimulationReport> run_grid(const std::vector<Scenario>& grid,
                                              int threads = 1) {
  if (grid.empty()) throw std::invalid_argument("run_grid: empty scenario list");
  std::vector<SimulationReport> reports;
  reports.reserve(grid.size());
  for (const Scenario& sc : grid) reports.push_back(run_scenario(sc, threads));
  return reports;
}

/// Per-method rejection rate of H0: SVE = 0 under a null scenario (p0 = p1).
inline std::vector<std::pair<CiMethod, double>> null_type_i(const Scenario& sc,
                                                            int threads = 1) {
  if (sc.p0 != sc.p1)
    throw std::invalid_argument("null_type_i: requires p0 == p1");
  const SimulationReport rep = run_scenario(sc, threads);
  std::vector<std::pair<CiMethod, double>> rates;
  rates.reserve(rep.method_stats.size());
  for (const MethodStats& ms : rep.method_stats)
    rates.emplace_back(ms.method, ms.type_i_error.value_or(0.0));
  return rates;
}

}  // namespace sve
