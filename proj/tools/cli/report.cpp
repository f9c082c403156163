#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace obw::cli {

const char* to_string(Format format) {
  switch (format) {
    case Format::csv: return "csv";
    case Format::json: return "json";
    case Format::text: return "text";
  }
  return "?";
}

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw std::logic_error("report row width does not match the header");
  }
  rows.push_back(std::move(row));
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.8e", v);
  return buf;
}

namespace {

std::string cell_text(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_number(*d);
  if (const auto* b = std::get_if<bool>(&c)) return *b ? "true" : "false";
  return std::get<std::string>(c);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

void write_csv(std::ostream& os, const Table& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    os << (i ? "," : "") << csv_escape(table.columns[i]);
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << (i ? "," : "") << csv_escape(cell_text(row[i]));
    }
    os << '\n';
  }
}

void write_json(std::ostream& os, const Table& table) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      const Cell& c = row[i];
      if (const auto* d = std::get_if<double>(&c)) {
        // JSON has no inf or nan; those go out as strings.
        if (std::isfinite(*d)) {
          obj[table.columns[i]] = *d;
        } else {
          obj[table.columns[i]] = format_number(*d);
        }
      } else if (const auto* b = std::get_if<bool>(&c)) {
        obj[table.columns[i]] = *b;
      } else {
        obj[table.columns[i]] = std::get<std::string>(c);
      }
    }
    rows.push_back(std::move(obj));
  }
  os << rows.dump(2) << '\n';
}

void write_text(std::ostream& os, const Table& table) {
  std::size_t width = 0;
  for (const auto& c : table.columns) width = std::max(width, c.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    if (r) os << '\n';
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      os << table.columns[i] << std::string(width - table.columns[i].size(), ' ')
         << "  " << cell_text(table.rows[r][i]) << '\n';
    }
  }
}

void write_table(std::ostream& os, const Table& table, Format format) {
  switch (format) {
    case Format::csv: write_csv(os, table); break;
    case Format::json: write_json(os, table); break;
    case Format::text: write_text(os, table); break;
  }
}

}  // namespace obw::cli
