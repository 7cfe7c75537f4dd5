#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dnacode/types.hpp"

namespace dnacode {

enum class TableId { capacity, coefficient, eta, two_mode, state_independent, state_dependent, gamma };

std::optional<TableId> parse_table_id(const std::string& name);
std::string table_name(TableId id);
std::vector<std::string> table_names();

struct TableRow {
  std::string label;
  /// Empty cells are printed as nothing between the commas.
  std::vector<std::optional<double>> values;
};

struct Table {
  std::vector<std::string> header;
  std::vector<TableRow> rows;
};

Table make_table(TableId id);

/// Rows (n, a, r) with r = 2n - log2 N_a(n), for every a and n_min <= n <= n_max.
Table figure1_table(const std::vector<double>& a_list, unsigned n_min, unsigned n_max,
                    BoundaryMode mode = BoundaryMode::strict);

/// Comma-separated, '.' decimal point regardless of locale, fixed notation.
void write_csv(std::ostream& out, const Table& table, int precision = 4);
std::string format_fixed(double value, int precision);

}  // namespace dnacode
