#include "fslp/table.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace fslp {
namespace {

std::string csv_quote(const std::string& s) {
  bool needs = s.find_first_of(",\"\n\r") != std::string::npos;
  if (!needs) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string format_sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.8e", v);
  return buf;
}

void ResultTable::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size())
    throw std::invalid_argument("ResultTable: row width mismatch");
  rows.push_back(std::move(row));
}

std::string ResultTable::to_csv() const {
  std::string out;
  for (const auto& [k, v] : provenance) out += "# " + k + " = " + v + "\n";
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out += ',';
    out += csv_quote(columns[i]);
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      if (std::holds_alternative<double>(row[i]))
        out += format_sci(std::get<double>(row[i]));
      else
        out += csv_quote(std::get<std::string>(row[i]));
    }
    out += '\n';
  }
  return out;
}

std::string ResultTable::to_json() const {
  std::string out = "{\n  \"config\": {";
  for (std::size_t i = 0; i < provenance.size(); ++i) {
    if (i) out += ',';
    out += "\n    \"" + json_escape(provenance[i].first) + "\": \"" +
           json_escape(provenance[i].second) + "\"";
  }
  out += "\n  },\n  \"columns\": [";
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out += ", ";
    out += "\"" + json_escape(columns[i]) + "\"";
  }
  out += "],\n  \"rows\": [";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) out += ',';
    out += "\n    [";
    for (std::size_t i = 0; i < rows[r].size(); ++i) {
      if (i) out += ", ";
      if (std::holds_alternative<double>(rows[r][i]))
        out += format_sci(std::get<double>(rows[r][i]));
      else
        out += "\"" + json_escape(std::get<std::string>(rows[r][i])) + "\"";
    }
    out += ']';
  }
  out += "\n  ]\n}\n";
  return out;
}

void ResultTable::write(const std::string& path, const std::string& format) const {
  std::string body;
  if (format == "csv")
    body = to_csv();
  else if (format == "json")
    body = to_json();
  else
    throw std::invalid_argument("ResultTable: unknown format '" + format + "'");
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("ResultTable: cannot open " + path);
  f << body;
}

}  // namespace fslp
