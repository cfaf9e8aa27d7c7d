#ifndef FSLP_TABLE_HPP
#define FSLP_TABLE_HPP

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace fslp {

// Rectangular result table with a provenance header (resolved config echo).
// Cells are doubles or strings; complex quantities are stored as re/im
// column pairs. Numbers are serialized in scientific notation with nine
// significant digits so identical configs produce byte-identical files.
struct ResultTable {
  using Cell = std::variant<double, std::string>;

  std::vector<std::pair<std::string, std::string>> provenance;  // ordered key/value
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
  std::string to_csv() const;   // RFC-4180-style quoting, '#' provenance lines
  std::string to_json() const;  // single object: config, columns, rows
  void write(const std::string& path, const std::string& format) const;
};

std::string format_sci(double v);

}  // namespace fslp

#endif
