#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sve/simulation.hpp"

namespace sve {

/// Simulation config parse failure, carrying the offending line number.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(int line, const std::string& msg)
      : std::runtime_error("config line " + std::to_string(line) + ": " + msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct SimConfig {
  std::vector<Scenario> scenarios;
  std::optional<std::uint64_t> seed;  // from the file; the CLI may override
};

// Scenario grid config format
// ---------------------------
// Line-oriented key/value text. '#' starts a comment, blank lines are
// ignored. Three section kinds:
//
//   [defaults]   replicates / level / methods / seed applied to every
//                following scenario block that does not override them
//   [scenario]   one cell; requires p0, p1, n0, n1 (single values)
//   [grid]       like [scenario] but p0, p1, n0, n1 may list several
//                whitespace- or comma-separated values; the block expands
//                to their cartesian product
//
// Example:
//
//   [defaults]
//   replicates = 2000
//   level = 0.95
//   methods = profile wald tanh-wald
//
//   [grid]
//   p0 = 0.1 0.3 0.5
//   p1 = 0.1 0.3 0.5
//   n0 = 100 1000
//   n1 = 100 1000

namespace detail {

struct RawBlock {
  std::string kind;
  int line = 0;
  std::vector<std::pair<std::string, std::pair<std::string, int>>> entries;

  const std::pair<std::string, int>* find(const std::string& key) const {
    for (const auto& e : entries)
      if (e.first == key) return &e.second;
    return nullptr;
  }
};

inline std::string strip(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_values(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ' ' || ch == '\t' || ch == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

inline double parse_double(const std::string& tok, int line) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(line, "not a number: '" + tok + "'");
  }
}

inline long long parse_int(const std::string& tok, int line) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(line, "not an integer: '" + tok + "'");
  }
}

inline CiMethod parse_method(const std::string& tok, int line) {
  if (tok == "profile") return CiMethod::Profile;
  if (tok == "wald") return CiMethod::Wald;
  if (tok == "tanh-wald") return CiMethod::TanhWald;
  throw ConfigError(line, "unknown method '" + tok +
                              "' (expected profile, wald, tanh-wald)");
}

}  // namespace detail

inline SimConfig parse_sim_config(std::istream& in) {
  using detail::RawBlock;

  std::vector<RawBlock> blocks;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = detail::strip(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError(lineno, "unterminated section header");
      const std::string kind = detail::strip(line.substr(1, line.size() - 2));
      if (kind != "defaults" && kind != "scenario" && kind != "grid")
        throw ConfigError(lineno, "unknown section [" + kind + "]");
      blocks.push_back(RawBlock{kind, lineno, {}});
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(lineno, "expected 'key = value'");
    if (blocks.empty())
      throw ConfigError(lineno, "key/value outside any section");
    const std::string key = detail::strip(line.substr(0, eq));
    const std::string value = detail::strip(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ConfigError(lineno, "empty key or value");
    blocks.back().entries.push_back({key, {value, lineno}});
  }

  SimConfig cfg;
  Scenario defaults;  // carries replicates/level/methods defaults

  for (const RawBlock& blk : blocks) {
    if (blk.kind == "defaults") {
      for (const auto& [key, vl] : blk.entries) {
        const auto& [value, vline] = vl;
        if (key == "replicates") {
          defaults.replicates = detail::parse_int(value, vline);
        } else if (key == "level") {
          defaults.level = detail::parse_double(value, vline);
        } else if (key == "methods") {
          defaults.methods.clear();
          for (const std::string& tok : detail::split_values(value))
            defaults.methods.push_back(detail::parse_method(tok, vline));
          if (defaults.methods.empty())
            throw ConfigError(vline, "methods list is empty");
        } else if (key == "seed") {
          cfg.seed = static_cast<std::uint64_t>(detail::parse_int(value, vline));
        } else {
          throw ConfigError(vline, "unknown [defaults] key '" + key + "'");
        }
      }
      continue;
    }

    const bool is_grid = (blk.kind == "grid");
    Scenario base = defaults;
    std::vector<double> p0s, p1s;
    std::vector<long long> n0s, n1s;
    for (const auto& [key, vl] : blk.entries) {
      const auto& [value, vline] = vl;
      const auto values = detail::split_values(value);
      if (!is_grid && values.size() != 1 &&
          (key == "p0" || key == "p1" || key == "n0" || key == "n1"))
        throw ConfigError(vline, "[scenario] keys take a single value; use [grid]");
      if (key == "p0") {
        for (const auto& t : values) p0s.push_back(detail::parse_double(t, vline));
      } else if (key == "p1") {
        for (const auto& t : values) p1s.push_back(detail::parse_double(t, vline));
      } else if (key == "n0") {
        for (const auto& t : values) n0s.push_back(detail::parse_int(t, vline));
      } else if (key == "n1") {
        for (const auto& t : values) n1s.push_back(detail::parse_int(t, vline));
      } else if (key == "replicates") {
        base.replicates = detail::parse_int(value, vline);
      } else if (key == "level") {
        base.level = detail::parse_double(value, vline);
      } else if (key == "methods") {
        base.methods.clear();
        for (const std::string& tok : detail::split_values(value))
          base.methods.push_back(detail::parse_method(tok, vline));
        if (base.methods.empty())
          throw ConfigError(vline, "methods list is empty");
      } else {
        throw ConfigError(vline, "unknown [" + blk.kind + "] key '" + key + "'");
      }
    }
    if (p0s.empty() || p1s.empty() || n0s.empty() || n1s.empty())
      throw ConfigError(blk.line,
                        "[" + blk.kind + "] block needs p0, p1, n0 and n1");

    for (long long n0 : n0s)
      for (long long n1 : n1s)
        for (double p0 : p0s)
          for (double p1 : p1s) {
            Scenario sc = base;
            sc.p0 = p0;
            sc.p1 = p1;
            sc.n0 = n0;
            sc.n1 = n1;
            try {
              validate_scenario(sc);
            } catch (const std::invalid_argument& e) {
              throw ConfigError(blk.line, e.what());
            }
            cfg.scenarios.push_back(sc);
          }
  }

  if (cfg.scenarios.empty())
    throw ConfigError(lineno, "config defines no scenarios");
  return cfg;
}

inline SimConfig parse_sim_config(const std::string& text) {
  std::istringstream in(text);
  return parse_sim_config(in);
}

}  // namespace sve
