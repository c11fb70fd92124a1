#pragma once

// Parameter bag for one CLI invocation: values from an optional JSON config
// file, overridden by command-line flags.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lightclock/cli/units.hpp"

namespace lightclock::cli {

inline constexpr double kDefaultLightSpeed = 299792458.0;
inline constexpr double kDefaultTolerance = 1e-12;

struct Sweep {
  double from = 0.0;
  double to = 0.0;
  int count = 0;

  /// count points from..to inclusive; count = 1 yields {from}.
  std::vector<double> points() const;
};

class Params {
 public:
  /// allowed: the field names this command understands. Config keys outside
  /// that set are rejected.
  Params(const nlohmann::ordered_json& config, const std::map<std::string, std::string>& flags,
         const std::set<std::string>& allowed);

  bool has(const std::string& name) const;
  double get(const std::string& name, Dimension dim) const;
  double get_or(const std::string& name, Dimension dim, double fallback) const;
  std::optional<double> get_opt(const std::string& name, Dimension dim) const;
  int get_int(const std::string& name) const;
  bool get_bool(const std::string& name) const;
  std::string get_string(const std::string& name) const;
  std::optional<std::string> get_string_opt(const std::string& name) const;
  line_elements::CosmologicalConstant get_lambda(const std::string& name) const;
  /// "from:to:count" with optional unit after count ("1:10:100 cm").
  Sweep get_sweep(const std::string& name, Dimension dim) const;

  double c() const { return c_; }
  double tol() const { return tol_; }

 private:
  const nlohmann::ordered_json& raw(const std::string& name) const;

  std::map<std::string, nlohmann::ordered_json> values_;
  double c_ = kDefaultLightSpeed;
  double tol_ = kDefaultTolerance;
};

/// Reads LIGHTCLOCK_TOL; falls back to the default when unset.
double tolerance_from_env();

nlohmann::ordered_json load_config(const std::string& path);

}  // namespace lightclock::cli
