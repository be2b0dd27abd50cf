#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hyperball {

/// Tabular output record: named columns, typed cells, optional footer
/// key/value pairs.  Renders to CSV (mandatory header row, comma separator,
/// LF line endings, no trailing delimiter) or JSON (array of row objects in
/// column order).  Reals are printed with 17 significant digits, so parsing
/// CSV back and re-rendering reproduces the bytes exactly.
class Table {
 public:
  using Cell = std::variant<std::int64_t, double, std::string>;

  explicit Table(std::vector<std::string> columns);

  void add_row(std::vector<Cell> cells);  // size must match the column count
  void add_footer(const std::string& key, double value);

  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<Cell>>& rows() const { return rows_; }
  const std::vector<std::pair<std::string, double>>& footers() const {
    return footers_;
  }

  std::string to_csv() const;
  std::string to_json() const;

  /// Parse CSV produced by to_csv; numeric-looking cells become numbers,
  /// "# key,value" comment lines become footers.
  static Table from_csv(const std::string& text);

  static std::string format_real(double v);         // %.17g
  static std::string format_int(std::int64_t v);
  static std::string format_cell(const Cell& cell);

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
  std::vector<std::pair<std::string, double>> footers_;
};

}  // namespace hyperball
