#pragma once

// Tabular output shared by every CLI mode. CSV files start with "# key: value"
// metadata lines followed by a fixed header row; JSON carries the same data.

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace vibq::cli {

using Cell = std::variant<double, long long, bool, std::string>;

struct Table {
  std::string name;  ///< e.g. "qubit", "wigner"
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

/// Locale-independent shortest round-trip formatting used for every real value.
std::string format_real(double v);

void write_csv(std::ostream& out, const Table& table);
/// {"schema": ..., "tables": [...]}
void write_json(std::ostream& out, const std::vector<Table>& tables);

}  // namespace vibq::cli
