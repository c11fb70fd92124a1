#include "lightclock/cli/output.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

namespace lightclock::cli {

std::string format_number(double x) {
  if (std::isnan(x)) {
    return "nan";
  }
  if (std::isinf(x)) {
    return x > 0 ? "inf" : "-inf";
  }
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string to_csv(const Table& t) {
  std::string out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) {
      out += ',';
    }
    out += t.columns[i].name + " [" + t.columns[i].unit + "]";
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) {
        out += ',';
      }
      out += format_number(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json_text(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

void write_output(const std::string& text, const std::optional<std::string>& path,
                  std::ostream& out) {
  if (!path) {
    out << text;
    return;
  }
  std::ofstream f(*path, std::ios::binary | std::ios::trunc);
  if (!f) {
    throw OutputError("cannot write '" + *path + "'");
  }
  f << text;
  f.flush();
  if (!f) {
    throw OutputError("cannot write '" + *path + "'");
  }
}

}  // namespace lightclock::cli
