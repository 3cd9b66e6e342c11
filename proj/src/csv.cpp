#include "photonsub/csv.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace photonsub {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[32];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

namespace {

// Quote only when the delimiter set demands it; keeps numeric output clean.
std::string escape(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char ch : text) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  quoted += '"';
  return quoted;
}

}  // namespace

CsvTable::CsvTable(std::vector<std::string> columns) : columns_(std::move(columns)) {
  if (columns_.empty()) throw std::invalid_argument("CsvTable: need at least one column");
}

void CsvTable::add_comment(std::string line) {
  if (line.find('\n') != std::string::npos)
    throw std::invalid_argument("CsvTable: comment must be a single line");
  comments_.push_back(std::move(line));
}

void CsvTable::add_row(std::vector<CsvCell> cells) {
  if (cells.size() != columns_.size())
    throw std::invalid_argument("CsvTable: row width does not match the header");
  rows_.push_back(std::move(cells));
}

std::string CsvTable::to_string() const {
  std::string out;
  for (const std::string& comment : comments_) {
    out += "# ";
    out += comment;
    out += '\n';
  }
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (i) out += ',';
    out += escape(columns_[i]);
  }
  out += '\n';
  for (const std::vector<CsvCell>& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      const CsvCell& cell = row[i];
      if (std::holds_alternative<long long>(cell))
        out += std::to_string(std::get<long long>(cell));
      else if (std::holds_alternative<double>(cell))
        out += format_double(std::get<double>(cell));
      else if (std::holds_alternative<std::string>(cell))
        out += escape(std::get<std::string>(cell));
    }
    out += '\n';
  }
  return out;
}

}  // namespace photonsub
