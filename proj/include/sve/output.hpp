#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "sve/intervals.hpp"
#include "sve/labbe.hpp"
#include "sve/simulation.hpp"
#include "sve/vax004.hpp"

namespace sve {

/// One serialized estimate: the five frozen output columns.
struct ResultRow {
  double estimate;
  double lower;
  double upper;
  double level;
  std::string method;
};

inline ResultRow make_result_row(double estimate, const ConfidenceInterval& ci) {
  return {estimate, ci.lower, ci.upper, ci.level, method_name(ci.method)};
}

/// Rounds half away from zero at `digits` decimals (display rounding; tables
/// print two decimals, machine formats keep full precision).
inline double round_half_away(double x, int digits) {
  const double scale = std::pow(10.0, digits);
  return std::copysign(std::floor(std::fabs(x) * scale + 0.5), x) / scale;
}

namespace detail {

inline std::string fixed2(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", round_half_away(x, 2));
  return buf;
}

inline std::string full(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace detail

inline std::string result_text(const ResultRow& row) {
  std::string out = "estimate  lower  upper  level  method\n";
  out += detail::fixed2(row.estimate) + "  " + detail::fixed2(row.lower) +
         "  " + detail::fixed2(row.upper) + "  " + detail::fixed2(row.level) +
         "  " + row.method + "\n";
  return out;
}

inline std::string result_csv(const ResultRow& row) {
  return "estimate,lower,upper,level,method\n" + detail::full(row.estimate) +
         "," + detail::full(row.lower) + "," + detail::full(row.upper) + "," +
         detail::full(row.level) + "," + row.method + "\n";
}

inline nlohmann::json result_json(const ResultRow& row) {
  return {{"estimate", row.estimate},
          {"lower", row.lower},
          {"upper", row.upper},
          {"level", row.level},
          {"method", row.method}};
}

// ---- simulation reports: one row per scenario x method ----

inline std::string reports_csv_header() {
  return "p0,p1,n0,n1,replicates,level,method,true_sve,bias,bias_bc,"
         "empirical_se,mean_estimated_se,coverage,type_i_error,"
         "mean_width_ve,mean_width_sve,ci_failures,ve_undefined,"
         "undefined_count";
}

inline std::string reports_csv(const std::vector<SimulationReport>& reports) {
  std::string out = reports_csv_header() + "\n";
  for (const SimulationReport& rep : reports) {
    const Scenario& sc = rep.scenario;
    for (const MethodStats& ms : rep.method_stats) {
      out += detail::full(sc.p0) + "," + detail::full(sc.p1) + "," +
             std::to_string(sc.n0) + "," + std::to_string(sc.n1) + "," +
             std::to_string(sc.replicates) + "," + detail::full(sc.level) +
             "," + method_name(ms.method) + "," + detail::full(rep.true_sve) +
             "," + detail::full(rep.bias) + "," + detail::full(rep.bias_bc) +
             "," + detail::full(rep.empirical_se) + "," +
             detail::full(rep.mean_estimated_se) + "," +
             detail::full(ms.coverage) + "," +
             (ms.type_i_error ? detail::full(*ms.type_i_error) : std::string()) +
             "," + detail::full(rep.mean_width_ve) + "," +
             detail::full(ms.mean_width_sve) + "," +
             std::to_string(ms.ci_failures) + "," +
             std::to_string(rep.ve_undefined) + "," +
             std::to_string(rep.undefined_count) + "\n";
    }
  }
  return out;
}

inline nlohmann::json reports_json(const std::vector<SimulationReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const SimulationReport& rep : reports) {
    const Scenario& sc = rep.scenario;
    for (const MethodStats& ms : rep.method_stats) {
      nlohmann::json row{{"p0", sc.p0},
                         {"p1", sc.p1},
                         {"n0", sc.n0},
                         {"n1", sc.n1},
                         {"replicates", sc.replicates},
                         {"level", sc.level},
                         {"method", method_name(ms.method)},
                         {"true_sve", rep.true_sve},
                         {"bias", rep.bias},
                         {"bias_bc", rep.bias_bc},
                         {"empirical_se", rep.empirical_se},
                         {"mean_estimated_se", rep.mean_estimated_se},
                         {"coverage", ms.coverage},
                         {"mean_width_ve", rep.mean_width_ve},
                         {"mean_width_sve", ms.mean_width_sve},
                         {"ci_failures", ms.ci_failures},
                         {"ve_undefined", rep.ve_undefined},
                         {"undefined_count", rep.undefined_count}};
      row["type_i_error"] =
          ms.type_i_error ? nlohmann::json(*ms.type_i_error) : nlohmann::json();
      arr.push_back(std::move(row));
    }
  }
  return arr;
}

// ---- reanalysis table ----

inline std::string reanalysis_text(const std::vector<ReanalysisRow>& rows) {
  char buf[256];
  std::string out =
      "category                        vaccine    placebo    "
      "VE (CI)                 SVE (CI)\n";
  for (const ReanalysisRow& r : rows) {
    std::snprintf(buf, sizeof buf,
                  "%-30.30s  %lld/%-6lld %lld/%-6lld %s (%s to %s)%*s%s (%s to %s)\n",
                  std::string(r.record.category).c_str(), r.record.x1,
                  r.record.n1, r.record.x0, r.record.n0,
                  detail::fixed2(r.ve).c_str(),
                  detail::fixed2(r.ve_ci.lower).c_str(),
                  detail::fixed2(r.ve_ci.upper).c_str(), 2, "",
                  detail::fixed2(r.sve).c_str(),
                  detail::fixed2(r.sve_ci.lower).c_str(),
                  detail::fixed2(r.sve_ci.upper).c_str());
    out += buf;
  }
  return out;
}

inline std::string reanalysis_csv(const std::vector<ReanalysisRow>& rows) {
  std::string out =
      "category,x1,n1,x0,n0,ve,ve_lower,ve_upper,sve,sve_lower,sve_upper,level\n";
  for (const ReanalysisRow& r : rows) {
    out += "\"" + std::string(r.record.category) + "\"," +
           std::to_string(r.record.x1) + "," + std::to_string(r.record.n1) +
           "," + std::to_string(r.record.x0) + "," +
           std::to_string(r.record.n0) + "," + detail::full(r.ve) + "," +
           detail::full(r.ve_ci.lower) + "," + detail::full(r.ve_ci.upper) +
           "," + detail::full(r.sve) + "," + detail::full(r.sve_ci.lower) +
           "," + detail::full(r.sve_ci.upper) + "," +
           detail::full(r.sve_ci.level) + "\n";
  }
  return out;
}

inline nlohmann::json reanalysis_json(const std::vector<ReanalysisRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const ReanalysisRow& r : rows)
    arr.push_back({{"category", std::string(r.record.category)},
                   {"x1", r.record.x1},
                   {"n1", r.record.n1},
                   {"x0", r.record.x0},
                   {"n0", r.record.n0},
                   {"ve", r.ve},
                   {"ve_lower", r.ve_ci.lower},
                   {"ve_upper", r.ve_ci.upper},
                   {"sve", r.sve},
                   {"sve_lower", r.sve_ci.lower},
                   {"sve_upper", r.sve_ci.upper},
                   {"level", r.sve_ci.level}});
  return arr;
}

// ---- L'Abbe curve data ----

inline std::string labbe_csv(const std::vector<LabbePoint>& points) {
  std::string out = "s,p0,p1\n";
  for (const LabbePoint& pt : points)
    out += detail::full(pt.s) + "," + detail::full(pt.p0) + "," +
           detail::full(pt.p1) + "\n";
  return out;
}

}  // namespace sve
