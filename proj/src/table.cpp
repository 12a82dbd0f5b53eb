#include "splineqi/table.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace splineqi {

void Table::add_row(std::vector<std::string> cells) {
  if (cells.size() != columns.size()) throw std::domain_error("row width does not match the header");
  rows.push_back(std::move(cells));
}

namespace {

std::string csv_cell(const std::string& cell) {
  if (cell.find_first_of(",\"\n\r") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void append_csv_line(std::string& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out += ',';
    out += csv_cell(cells[i]);
  }
  out += '\n';
}

}  // namespace

std::string to_csv(const Table& table) {
  std::string out;
  append_csv_line(out, table.columns);
  for (const auto& row : table.rows) append_csv_line(out, row);
  return out;
}

Table parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> lines;
  std::vector<std::string> current;
  std::string cell;
  bool quoted = false;
  bool line_open = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    line_open = true;
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          cell += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cell += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      current.push_back(std::move(cell));
      cell.clear();
    } else if (c == '\n') {
      current.push_back(std::move(cell));
      cell.clear();
      lines.push_back(std::move(current));
      current.clear();
      line_open = false;
    } else if (c != '\r') {
      cell += c;
    }
  }
  if (quoted) throw std::domain_error("unterminated quote in CSV");
  if (line_open) {
    current.push_back(std::move(cell));
    lines.push_back(std::move(current));
  }
  if (lines.empty()) throw std::domain_error("CSV has no header");
  Table table;
  table.columns = std::move(lines.front());
  for (std::size_t i = 1; i < lines.size(); ++i) table.add_row(std::move(lines[i]));
  return table;
}

std::string to_json(const Table& table) {
  nlohmann::ordered_json doc;
  doc["title"] = table.title;
  doc["meta"] = table.meta;
  doc["columns"] = table.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < row.size(); ++i) obj[table.columns[i]] = row[i];
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::string to_text(const Table& table) {
  std::vector<std::size_t> width(table.columns.size());
  for (std::size_t i = 0; i < width.size(); ++i) width[i] = table.columns[i].size();
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::string out;
  if (!table.title.empty()) out += table.title + "\n";
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out += fmt::format("{:>{}}", cells[i], width[i]);
      out += i + 1 < cells.size() ? "  " : "\n";
    }
  };
  line(table.columns);
  for (const auto& row : table.rows) line(row);
  return out;
}

std::string paper_style(double value, int digits) {
  if (value == 0.0) return "0";
  if (!std::isfinite(value)) return fmt::format("{}", value);
  const double mag = std::abs(value);
  int exponent = static_cast<int>(std::floor(std::log10(mag))) + 1;
  const double scale = std::pow(10.0, digits);
  double mantissa = std::round(mag / std::pow(10.0, exponent) * scale) / scale;
  if (mantissa >= 1.0) {
    mantissa /= 10.0;
    ++exponent;
  }
  return fmt::format("{}{:.{}f}({})", value < 0 ? "-" : "", mantissa, digits, exponent);
}

std::string full_precision(double value) { return fmt::format("{:.16e}", value); }

std::string fixed(double value, int decimals) { return fmt::format("{:.{}f}", value, decimals); }

}  // namespace splineqi
