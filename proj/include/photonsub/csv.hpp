#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace photonsub {

/// One CSV cell: empty, integer, shortest-round-trip double, or verbatim text.
using CsvCell = std::variant<std::monostate, long long, double, std::string>;

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double value);

/// Deterministic CSV builder: '#'-prefixed comment lines (provenance), one header
/// row, then data rows. Rendering the same table twice is byte-identical.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> columns);

  void add_comment(std::string line);             // without the leading '#'
  void add_row(std::vector<CsvCell> cells);       // size must match columns

  std::string to_string() const;

 private:
  std::vector<std::string> comments_;
  std::vector<std::string> columns_;
  std::vector<std::vector<CsvCell>> rows_;
};

}  // namespace photonsub
