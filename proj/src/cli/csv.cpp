#include "ddop/cli/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "ddop/cli/builtins.hpp"
#include "ddop/errors.hpp"

namespace ddop::cli {

std::string format_double(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::string format_optional(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

CsvWriter::CsvWriter(std::ostream& out, std::string_view config, std::string_view header)
    : out_(out) {
  out_ << "# " << config << '\n' << header << '\n';
}

void CsvWriter::write_line(const std::string& line) { out_ << line << '\n'; }

Table read_table(std::istream& in) {
  Table table;
  std::string line;
  bool have_header = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (!have_header) {
      std::stringstream ss(line);
      std::string field;
      while (std::getline(ss, field, ',')) table.header.push_back(field);
      have_header = true;
      continue;
    }
    try {
      table.rows.push_back(parse_number_list(line));
    } catch (const DomainError& e) {
      throw DomainError("CSV line " + std::to_string(line_no) + ": " + e.what());
    }
    if (table.rows.back().size() != table.header.size()) {
      throw DomainError("CSV line " + std::to_string(line_no) + ": expected " +
                        std::to_string(table.header.size()) + " fields");
    }
  }
  if (!have_header) throw DomainError("CSV input has no header");
  return table;
}

Table read_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  return read_table(in);
}

Signal signal_from_table(const Table& table) {
  if (table.header.size() < 2 || table.header[0] != "x" || table.header[1] != "value") {
    throw DomainError("1D CSV must start with the columns x,value");
  }
  const auto n = static_cast<Eigen::Index>(table.rows.size());
  if (n < 2) throw DomainError("1D CSV needs at least 2 rows");
  const double start = table.rows.front()[0];
  const double spacing = (table.rows.back()[0] - start) / static_cast<double>(n - 1);
  if (!(spacing > 0.0)) throw DomainError("1D CSV rows must be sorted by increasing x");
  Eigen::VectorXd values(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double x = table.rows[i][0];
    if (std::abs(x - (start + static_cast<double>(i) * spacing)) > 1e-9 * spacing + 1e-12 * std::abs(x)) {
      throw DomainError("1D CSV abscissae must be sorted and uniformly spaced");
    }
    values[i] = table.rows[i][1];
  }
  return Signal(start, spacing, std::move(values));
}

std::vector<GridSample> grid_from_table(const Table& table) {
  if (table.header.size() < 3 || table.header[0] != "x" || table.header[1] != "y" ||
      table.header[2] != "value") {
    throw DomainError("2D CSV must start with the columns x,y,value");
  }
  std::vector<GridSample> out;
  out.reserve(table.rows.size());
  for (const auto& r : table.rows) out.push_back({r[0], r[1], r[2]});
  return out;
}

}  // namespace ddop::cli
