#include "lightclock/cli/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>

namespace lightclock::cli {

using nlohmann::ordered_json;

std::vector<double> Sweep::points() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  if (count == 1) {
    out.push_back(from);
    return out;
  }
  for (int i = 0; i < count; ++i) {
    out.push_back(i == count - 1 ? to : from + (to - from) * i / (count - 1));
  }
  return out;
}

Params::Params(const ordered_json& config, const std::map<std::string, std::string>& flags,
               const std::set<std::string>& allowed) {
  if (!config.is_null()) {
    if (!config.is_object()) {
      throw ConfigError("config", "top level must be an object");
    }
    for (const auto& [key, value] : config.items()) {
      if (!allowed.count(key)) {
        throw ConfigError(key, "not a parameter of this command");
      }
      values_[key] = value;
    }
  }
  for (const auto& [key, value] : flags) {
    values_[key] = value;
  }
  tol_ = tolerance_from_env();
  if (get_bool("natural-units")) {
    if (has("c")) {
      throw ConfigError("c", "conflicts with natural-units");
    }
    c_ = 1.0;
  } else if (has("c")) {
    // c cannot be expressed in units of itself; a NaN light speed makes that
    // case fail parsing.
    c_ = parse_quantity("c", raw("c"), Dimension::velocity,
                        std::numeric_limits<double>::quiet_NaN());
    if (!(c_ > 0.0 && std::isfinite(c_))) {
      throw ConfigError("c", "must be positive");
    }
  }
}

bool Params::has(const std::string& name) const { return values_.count(name) > 0; }

const ordered_json& Params::raw(const std::string& name) const {
  const auto it = values_.find(name);
  if (it == values_.end()) {
    throw ConfigError(name, "missing required parameter");
  }
  return it->second;
}

double Params::get(const std::string& name, Dimension dim) const {
  return parse_quantity(name, raw(name), dim, c_);
}

double Params::get_or(const std::string& name, Dimension dim, double fallback) const {
  return has(name) ? get(name, dim) : fallback;
}

std::optional<double> Params::get_opt(const std::string& name, Dimension dim) const {
  if (!has(name)) {
    return std::nullopt;
  }
  return get(name, dim);
}

int Params::get_int(const std::string& name) const {
  const ordered_json& v = raw(name);
  if (v.is_number_integer()) {
    return v.get<int>();
  }
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    int x = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), x);
    if (res.ec == std::errc{} && res.ptr == s.data() + s.size()) {
      return x;
    }
  }
  throw ConfigError(name, "expected an integer");
}

bool Params::get_bool(const std::string& name) const {
  if (!has(name)) {
    return false;
  }
  const ordered_json& v = raw(name);
  if (v.is_boolean()) {
    return v.get<bool>();
  }
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s == "true" || s == "1") {
      return true;
    }
    if (s == "false" || s == "0") {
      return false;
    }
  }
  throw ConfigError(name, "expected true or false");
}

std::string Params::get_string(const std::string& name) const {
  const ordered_json& v = raw(name);
  if (!v.is_string()) {
    throw ConfigError(name, "expected a string");
  }
  return v.get<std::string>();
}

std::optional<std::string> Params::get_string_opt(const std::string& name) const {
  if (!has(name)) {
    return std::nullopt;
  }
  return get_string(name);
}

line_elements::CosmologicalConstant Params::get_lambda(const std::string& name) const {
  if (!has(name)) {
    return {};
  }
  return parse_cosmological_constant(name, raw(name));
}

Sweep Params::get_sweep(const std::string& name, Dimension dim) const {
  const std::string s = get_string(name);
  const auto p1 = s.find(':');
  const auto p2 = p1 == std::string::npos ? std::string::npos : s.find(':', p1 + 1);
  if (p2 == std::string::npos) {
    throw ConfigError(name, "expected from:to:count");
  }
  std::string tail = s.substr(p2 + 1);
  std::string unit;
  const auto sp = tail.find(' ');
  if (sp != std::string::npos) {
    unit = tail.substr(sp);
    tail = tail.substr(0, sp);
  }
  Sweep sw;
  sw.from = parse_quantity(name, ordered_json(s.substr(0, p1) + unit), dim, c_);
  sw.to = parse_quantity(name, ordered_json(s.substr(p1 + 1, p2 - p1 - 1) + unit), dim, c_);
  int n = 0;
  auto res = std::from_chars(tail.data(), tail.data() + tail.size(), n);
  if (res.ec != std::errc{} || res.ptr != tail.data() + tail.size() || n < 1) {
    throw ConfigError(name, "sweep count must be a positive integer");
  }
  sw.count = n;
  if (!(std::isfinite(sw.from) && std::isfinite(sw.to))) {
    throw ConfigError(name, "sweep bounds must be finite");
  }
  return sw;
}

double tolerance_from_env() {
  const char* env = std::getenv("LIGHTCLOCK_TOL");
  if (env == nullptr || *env == '\0') {
    return kDefaultTolerance;
  }
  const std::string s(env);
  double x = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), x);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || !(x > 0.0)) {
    throw ConfigError("LIGHTCLOCK_TOL", "must be a positive number");
  }
  return x;
}

ordered_json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("config", "cannot open '" + path + "'");
  }
  try {
    return ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config", std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace lightclock::cli
