#pragma once
#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>
#include <system_error>
#include <vector>

#include "lfsrx/errors.hpp"

namespace lfsrx {

// Generic (x, y[, ref]) numeric series backing the CSV exports.
struct SeriesRow {
  double x = 0.0;
  double y = 0.0;
  std::optional<double> ref;
};

struct SeriesTable {
  std::string label;
  std::vector<SeriesRow> rows;

  bool has_ref() const {
    for (const auto& r : rows)
      if (r.ref) return true;
    return false;
  }

  void validate() const {
    for (std::size_t i = 1; i < rows.size(); ++i)
      if (!(rows[i - 1].x < rows[i].x))
        throw ConfigError("series '" + label + "' x values must be strictly increasing");
  }
};

namespace detail {

inline std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace detail

// Atomic write: temp file in the target directory, then rename.
inline void write_csv(const SeriesTable& table, const std::filesystem::path& path) {
  table.validate();
  const bool ref = table.has_ref();
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::FILE* f = std::fopen(tmp.string().c_str(), "w");
    if (!f) throw ConfigError("cannot open '" + tmp.string() + "' for writing");
    std::fputs(ref ? "x,y,ref\n" : "x,y\n", f);
    for (const auto& r : table.rows) {
      std::string line = detail::format_number(r.x) + "," + detail::format_number(r.y);
      if (ref) line += "," + (r.ref ? detail::format_number(*r.ref) : std::string());
      line += "\n";
      if (std::fputs(line.c_str(), f) == EOF) {
        std::fclose(f);
        std::filesystem::remove(tmp);
        throw ConfigError("write failed for '" + tmp.string() + "'");
      }
    }
    if (std::fclose(f) != 0) {
      std::filesystem::remove(tmp);
      throw ConfigError("close failed for '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw ConfigError("rename to '" + path.string() + "' failed: " + ec.message());
  }
}

}  // namespace lfsrx
