#include "ejm/report.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace ejm::report {
namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (unsigned char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20) {
          out += fmt::format("\\u{:04x}", c);
        } else {
          out += static_cast<char>(c);
        }
    }
  }
  out += '"';
  return out;
}

std::string csv_cell(const Cell& c) {
  return std::visit(overloaded{
                        [](std::monostate) { return std::string(); },
                        [](bool b) { return std::string(b ? "true" : "false"); },
                        [](long long v) { return fmt::format("{}", v); },
                        [](double v) { return format_double(v); },
                        [](const std::string& s) { return csv_field(s); },
                    },
                    c);
}

std::string json_cell(const Cell& c) {
  return std::visit(overloaded{
                        [](std::monostate) { return std::string("null"); },
                        [](bool b) { return std::string(b ? "true" : "false"); },
                        [](long long v) { return fmt::format("{}", v); },
                        [](double v) { return std::isfinite(v) ? format_double(v) : std::string("null"); },
                        [](const std::string& s) { return json_string(s); },
                    },
                    c);
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw std::invalid_argument(
        fmt::format("table '{}': row has {} cells for {} columns", command, row.size(), columns.size()));
  }
  rows.push_back(std::move(row));
}

std::string format_double(double v) {
  if (!std::isfinite(v)) return {};
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  return fmt::format("{:.17g}", v);
}

std::string to_csv(const Table& t) {
  std::string out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) out += ',';
    out += csv_field(t.columns[i]);
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_cell(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Table& t) {
  std::string out = "{\"command\": " + json_string(t.command) + ", \"columns\": [";
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) out += ", ";
    out += json_string(t.columns[i]);
  }
  out += "], \"rows\": [";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    out += r ? ",\n  {" : "\n  {";
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
      if (i) out += ", ";
      out += json_string(t.columns[i]) + ": " + json_cell(t.rows[r][i]);
    }
    out += '}';
  }
  out += t.rows.empty() ? "]}\n" : "\n]}\n";
  return out;
}

std::string render(const Table& t, Format f) { return f == Format::csv ? to_csv(t) : to_json(t); }

}  // namespace ejm::report
