#pragma once

// Tabular report rendering shared by every command.

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace obw::cli {

enum class Format { csv, json, text };

const char* to_string(Format format);

using Cell = std::variant<double, std::string, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

// 9 significant digits in exponent form, e.g. -8.33333333e-02.
std::string format_number(double v);

void write_csv(std::ostream& os, const Table& table);
void write_json(std::ostream& os, const Table& table);
// One "column: value" block per row, blocks separated by a blank line.
void write_text(std::ostream& os, const Table& table);
void write_table(std::ostream& os, const Table& table, Format format);

}  // namespace obw::cli
