#pragma once

// CSV input/output for the command-line tools. Numbers are written in the
// shortest decimal form that round-trips, independent of the locale.

#include <Eigen/Dense>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ddop/localrep.hpp"

namespace ddop::cli {

std::string format_double(double v);
std::string format_optional(const std::optional<double>& v);

class CsvWriter {
 public:
  // Writes "# <config>" and then the column header.
  CsvWriter(std::ostream& out, std::string_view config, std::string_view header);

  template <typename... Fields>
  void row(const Fields&... fields) {
    std::string line;
    (append(line, fields), ...);
    line.pop_back();
    write_line(line);
  }

 private:
  static void append(std::string& line, double v) { line += format_double(v) + ','; }
  static void append(std::string& line, int v) { line += std::to_string(v) + ','; }
  static void append(std::string& line, const std::optional<double>& v) {
    line += format_optional(v) + ',';
  }
  static void append(std::string& line, std::string_view v) {
    line.append(v);
    line += ',';
  }
  static void append(std::string& line, const std::string& v) {
    append(line, std::string_view(v));
  }
  static void append(std::string& line, const char* v) { append(line, std::string_view(v)); }

  void write_line(const std::string& line);

  std::ostream& out_;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

/// Parses a numeric CSV; lines starting with '#' are skipped and the first
/// remaining line is the header.
Table read_table(std::istream& in);
Table read_table_file(const std::string& path);

/// `x,value` rows sorted by x on a uniform grid.
Signal signal_from_table(const Table& table);

struct GridSample {
  double x = 0.0;
  double y = 0.0;
  double value = 0.0;
};

/// `x,y,value` rows.
std::vector<GridSample> grid_from_table(const Table& table);

}  // namespace ddop::cli
