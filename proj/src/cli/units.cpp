#include "lightclock/cli/units.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <utility>

namespace lightclock::cli {

using nlohmann::ordered_json;

ConfigError::ConfigError(const std::string& field, const std::string& what)
    : std::runtime_error("field '" + field + "': " + what), field_(field) {}

namespace {

struct UnitEntry {
  Dimension dim;
  double factor;  // multiply to reach SI; velocity "c" is handled separately
};

const std::map<std::string, UnitEntry>& unit_table() {
  static const std::map<std::string, UnitEntry> table = {
      {"1", {Dimension::dimensionless, 1.0}},
      {"m", {Dimension::length, 1.0}},
      {"cm", {Dimension::length, 1e-2}},
      {"mm", {Dimension::length, 1e-3}},
      {"km", {Dimension::length, 1e3}},
      {"s", {Dimension::time, 1.0}},
      {"ms", {Dimension::time, 1e-3}},
      {"us", {Dimension::time, 1e-6}},
      {"ns", {Dimension::time, 1e-9}},
      {"m/s", {Dimension::velocity, 1.0}},
      {"km/s", {Dimension::velocity, 1e3}},
      {"c", {Dimension::velocity, 0.0}},
      {"Hz", {Dimension::frequency, 1.0}},
      {"kHz", {Dimension::frequency, 1e3}},
      {"MHz", {Dimension::frequency, 1e6}},
      {"GHz", {Dimension::frequency, 1e9}},
      {"THz", {Dimension::frequency, 1e12}},
      {"kg", {Dimension::mass, 1.0}},
      {"g", {Dimension::mass, 1e-3}},
      {"m^-2", {Dimension::inverse_length_squared, 1.0}},
      {"cm^-2", {Dimension::inverse_length_squared, 1e4}},
      {"km^-2", {Dimension::inverse_length_squared, 1e-6}},
      {"s^-2", {Dimension::inverse_time_squared, 1.0}},
  };
  return table;
}

const char* dimension_name(Dimension d) {
  switch (d) {
    case Dimension::dimensionless: return "dimensionless";
    case Dimension::length: return "length";
    case Dimension::time: return "time";
    case Dimension::velocity: return "velocity";
    case Dimension::frequency: return "frequency";
    case Dimension::mass: return "mass";
    case Dimension::inverse_length_squared: return "inverse length squared";
    case Dimension::inverse_time_squared: return "inverse time squared";
  }
  return "unknown";
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) {
    return {};
  }
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

// Splits "6.37e8 cm" into (6.37e8, "cm"); the unit is empty when absent.
std::pair<double, std::string> split_number(const std::string& field, const std::string& text) {
  const std::string s = trim(text);
  double x = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') {
    ++first;
  }
  auto res = std::from_chars(first, last, x);
  if (res.ec != std::errc{}) {
    throw ConfigError(field, "cannot parse number from '" + text + "'");
  }
  return {x, trim(std::string(res.ptr, last))};
}

struct Tagged {
  double value;
  std::string unit;
};

Tagged read_tagged(const std::string& field, const ordered_json& value) {
  if (value.is_number()) {
    return {value.get<double>(), ""};
  }
  if (value.is_string()) {
    auto [x, unit] = split_number(field, value.get<std::string>());
    return {x, unit};
  }
  if (value.is_object()) {
    if (!value.contains("value")) {
      throw ConfigError(field, "object form needs a 'value' key");
    }
    const auto& v = value.at("value");
    double x = 0.0;
    if (v.is_number()) {
      x = v.get<double>();
    } else if (v.is_string()) {
      auto [num, rest] = split_number(field, v.get<std::string>());
      if (!rest.empty()) {
        throw ConfigError(field, "'value' must be a plain number");
      }
      x = num;
    } else {
      throw ConfigError(field, "'value' must be a number");
    }
    std::string unit;
    if (value.contains("unit")) {
      if (!value.at("unit").is_string()) {
        throw ConfigError(field, "'unit' must be a string");
      }
      unit = trim(value.at("unit").get<std::string>());
    }
    for (const auto& [key, _] : value.items()) {
      if (key != "value" && key != "unit") {
        throw ConfigError(field, "unexpected key '" + key + "'");
      }
    }
    return {x, unit};
  }
  throw ConfigError(field, "expected a number, a tagged string or {value, unit}");
}

}  // namespace

const char* si_unit(Dimension d) {
  switch (d) {
    case Dimension::dimensionless: return "1";
    case Dimension::length: return "m";
    case Dimension::time: return "s";
    case Dimension::velocity: return "m/s";
    case Dimension::frequency: return "Hz";
    case Dimension::mass: return "kg";
    case Dimension::inverse_length_squared: return "m^-2";
    case Dimension::inverse_time_squared: return "s^-2";
  }
  return "?";
}

double parse_quantity(const std::string& field, const ordered_json& value, Dimension dim,
                      double c) {
  const Tagged t = read_tagged(field, value);
  double out = t.value;
  if (!t.unit.empty()) {
    const auto it = unit_table().find(t.unit);
    if (it == unit_table().end()) {
      throw ConfigError(field, "unknown unit '" + t.unit + "'");
    }
    if (it->second.dim != dim) {
      throw ConfigError(field, "unit '" + t.unit + "' is not a " + dimension_name(dim) + " unit");
    }
    out = t.unit == "c" ? t.value * c : t.value * it->second.factor;
  }
  if (std::isnan(out)) {
    throw ConfigError(field, "value is not a number");
  }
  return out;
}

line_elements::CosmologicalConstant parse_cosmological_constant(const std::string& field,
                                                                const ordered_json& value) {
  const Tagged t = read_tagged(field, value);
  if (t.unit.empty()) {
    if (t.value != 0.0) {
      throw ConfigError(field, "needs a unit tag (m^-2, cm^-2, km^-2 or s^-2)");
    }
    return {};
  }
  const auto it = unit_table().find(t.unit);
  if (it == unit_table().end()) {
    throw ConfigError(field, "unknown unit '" + t.unit + "'");
  }
  if (it->second.dim == Dimension::inverse_length_squared) {
    return {t.value * it->second.factor, line_elements::LambdaUnit::per_length_squared};
  }
  if (it->second.dim == Dimension::inverse_time_squared) {
    return {t.value * it->second.factor, line_elements::LambdaUnit::per_time_squared};
  }
  throw ConfigError(field, "unit '" + t.unit + "' is not an inverse-area or inverse-time-squared unit");
}

}  // namespace lightclock::cli
