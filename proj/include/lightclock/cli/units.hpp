#pragma once

// Unit-tagged quantities for CLI parameters. A value may be a bare number
// (taken in the field's SI unit), a string such as "6.37e8 cm" or "0.6c",
// or an object {"value": 6.37e8, "unit": "cm"}. Values are returned in SI.

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "lightclock/line_elements.hpp"

namespace lightclock::cli {

/// Bad or missing configuration; the message names the offending field.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& field, const std::string& what);
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

enum class Dimension {
  dimensionless,
  length,
  time,
  velocity,
  frequency,
  mass,
  inverse_length_squared,
  inverse_time_squared,
};

/// SI unit name used in CSV headers.
const char* si_unit(Dimension d);

double parse_quantity(const std::string& field, const nlohmann::ordered_json& value, Dimension dim,
                      double c);

/// Λ must carry a tag of m^-2 style (length) or s^-2 style (time); a bare
/// zero is accepted.
line_elements::CosmologicalConstant parse_cosmological_constant(
    const std::string& field, const nlohmann::ordered_json& value);

}  // namespace lightclock::cli
