#pragma once

// Tabular command output with deterministic CSV and JSON rendering.

#include <string>
#include <variant>
#include <vector>

namespace ejm::report {

// Empty cells render as an empty CSV field and JSON null; so do non-finite doubles.
using Cell = std::variant<std::monostate, bool, long long, double, std::string>;

enum class Format { csv, json };

struct Table {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  // Throws std::invalid_argument if the row width differs from the column count.
  void add_row(std::vector<Cell> row);
};

// %.17g; non-finite values give an empty string.
std::string format_double(double v);

// Header line plus one line per row, '\n' terminated. Fields containing a comma,
// quote or newline are quoted.
std::string to_csv(const Table& t);

// {"command": ..., "columns": [...], "rows": [{column: value, ...}, ...]}
std::string to_json(const Table& t);

std::string render(const Table& t, Format f);

}  // namespace ejm::report
