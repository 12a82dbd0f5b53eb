#pragma once

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace splineqi {

/// A rectangular table of preformatted cells, the unit of CLI output.
struct Table {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  /// Free-form metadata (degree, n-list, function); emitted with JSON only.
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();

  void add_row(std::vector<std::string> cells);
  bool operator==(const Table& other) const { return columns == other.columns && rows == other.rows; }
};

/// Header row plus one line per row, comma separated, RFC 4180 quoting.
std::string to_csv(const Table& table);
/// Inverse of to_csv (title and meta are not part of CSV).
Table parse_csv(std::string_view text);
/// {"title", "meta", "columns", "rows": [{column: cell, ...}, ...]}.
std::string to_json(const Table& table);
/// Column-aligned plain text.
std::string to_text(const Table& table);

/// Mantissa(exponent) notation with a mantissa in [0.1, 1): 7.3e-10 with two
/// digits becomes "0.73(-9)". Zero is "0".
std::string paper_style(double value, int digits = 2);
/// Round-trippable scientific notation.
std::string full_precision(double value);
/// Fixed notation with the given number of decimals.
std::string fixed(double value, int decimals);

}  // namespace splineqi
