#pragma once

// Published numerical tables, stored digit-for-digit, and their recomputation.

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace weyl {

enum class TableId { Table1Coeffs, Table2Chiti, Table3L2, Table4L32, Table5L128 };

std::string_view name(TableId id);
std::optional<TableId> parse_table_id(std::string_view text);  // "table2", "TABLE2_CHITI", ...
std::span<const TableId> all_tables();

struct Anomaly {
  int n;
  std::string_view column;
  std::string_view note;
};

struct TableFixture {
  TableId id;
  std::vector<std::string_view> columns;
  /// rows[i] holds the printed cells for n = 2 + i, e.g. "0.259775" or "6.177e14".
  std::vector<std::vector<std::string_view>> rows;
  std::vector<Anomaly> anomalies;
};

const TableFixture& fixture(TableId id);

/// Half-open tolerance of a printed decimal: one unit in its last digit.
double printed_unit(std::string_view printed);

enum class CellStatus { Pass, Fail, Anomaly };

struct CellResult {
  int n;
  std::string column;
  std::string printed;
  double printed_value;
  double derived;
  double tolerance;
  CellStatus status;
  std::string note;  // set for anomalies
};

/// The derived value of one cell from the bound catalog.
double derive_cell(TableId id, int n, std::string_view column);

std::vector<CellResult> reproduce_table(TableId id);

void write_diff(std::span<const CellResult> cells, TableId id, std::ostream& out);

}  // namespace weyl
