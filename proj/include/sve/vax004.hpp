#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sve/estimands.hpp"
#include "sve/intervals.hpp"

namespace sve {

/// One row of a trial summary table: infection counts and arm sizes for the
/// vaccine (x1/n1) and placebo (x0/n0) groups of one subgroup.
struct TrialRecord {
  std::string_view category;
  long long x1, n1;  // vaccine arm
  long long x0, n0;  // placebo arm

  TwoArmCounts counts() const { return {x0, n0, x1, n1}; }
};

/// VAX004 rgp120 HIV-1 vaccine trial, overall and subgroup infection counts.
/// Source: rgp120 HIV Vaccine Study Group (2005), "Placebo-controlled phase 3
/// trial of a recombinant glycoprotein 120 vaccine to prevent HIV-1
/// infection", J Infect Dis 191:654-665, Table 3.
inline const std::array<TrialRecord, 23>& vax004_table() {
  static const std::array<TrialRecord, 23> table = {{
      {"All volunteers", 241, 3598, 127, 1805},
      {"Men", 239, 3391, 123, 1704},
      {"Women", 2, 207, 4, 101},
      {"White (non-Hispanic)", 211, 2994, 98, 1495},
      {"White (non-Hispanic) men", 211, 2930, 98, 1468},
      {"Hispanic", 14, 239, 9, 128},
      {"Hispanic men", 13, 211, 9, 114},
      {"Black (non-Hispanic)", 6, 233, 9, 116},
      {"Black (non-Hispanic) men", 5, 121, 5, 59},
      {"Black (non-Hispanic) women", 1, 112, 4, 57},
      {"Asian (all men)", 3, 56, 3, 21},
      {"Other", 7, 76, 8, 45},
      {"Other men", 7, 73, 8, 42},
      {"Nonwhite", 30, 604, 29, 310},
      {"Nonwhite men", 28, 461, 25, 236},
      {"Nonwhite women", 2, 143, 4, 74},
      {"Age <= 30 years", 84, 971, 43, 504},
      {"Age > 30 years", 157, 2627, 84, 1301},
      {"Less than college degree", 95, 1409, 52, 713},
      {"College or graduate degree", 146, 2188, 75, 1092},
      {"Low behavioral risk", 32, 1211, 11, 609},
      {"Medium behavioral risk", 177, 2229, 90, 1107},
      {"High behavioral risk", 32, 158, 26, 89},
  }};
  return table;
}

/// One reanalyzed row: traditional VE with its log relative-risk Wald
/// interval next to SVE with its profile likelihood interval.
struct ReanalysisRow {
  TrialRecord record;
  double ve;
  ConfidenceInterval ve_ci;
  double sve;
  ConfidenceInterval sve_ci;
};

inline ReanalysisRow reanalyze_record(const TrialRecord& rec, double level = 0.95) {
  const TwoArmCounts counts = rec.counts();
  const RiskPair risks = empirical_risks(counts);
  return {rec,
          ve_point(risks).value,
          ve_wald_ci(counts, level),
          sve_point(risks).value,
          profile_ci(counts, level)};
}

inline std::vector<ReanalysisRow> reanalyze_vax004(double level = 0.95) {
  std::vector<ReanalysisRow> rows;
  rows.reserve(vax004_table().size());
  for (const TrialRecord& rec : vax004_table())
    rows.push_back(reanalyze_record(rec, level));
  return rows;
}

}  // namespace sve
