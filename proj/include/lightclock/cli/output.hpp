#pragma once

// Locale-independent CSV and JSON emission.

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace lightclock::cli {

/// Unwritable output destination (maps to exit code 1).
class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Column {
  std::string name;
  std::string unit;
};

struct Table {
  std::vector<Column> columns;
  std::vector<std::vector<double>> rows;
};

/// Shortest decimal string that parses back to exactly x.
std::string format_number(double x);

/// Header "name [unit],..." then one line per row, LF endings.
std::string to_csv(const Table& t);

/// Two-space indented JSON with a trailing newline.
std::string to_json_text(const nlohmann::ordered_json& j);

/// Writes to path when given, otherwise to out.
void write_output(const std::string& text, const std::optional<std::string>& path,
                  std::ostream& out);

}  // namespace lightclock::cli
