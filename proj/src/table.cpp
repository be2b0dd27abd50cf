#include "hyperball/table.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace hyperball {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == sep) {
      parts.emplace_back(line.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

Table::Cell parse_cell(const std::string& text) {
  if (!text.empty()) {
    errno = 0;
    char* end = nullptr;
    const long long iv = std::strtoll(text.c_str(), &end, 10);
    if (errno == 0 && end == text.c_str() + text.size())
      return static_cast<std::int64_t>(iv);
    const double dv = std::strtod(text.c_str(), &end);
    if (end == text.c_str() + text.size()) return dv;
  }
  return text;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

}  // namespace

Table::Table(std::vector<std::string> columns) : columns_(std::move(columns)) {
  if (columns_.empty()) throw std::invalid_argument("Table: no columns");
}

void Table::add_row(std::vector<Cell> cells) {
  if (cells.size() != columns_.size())
    throw std::invalid_argument("Table: row width does not match columns");
  rows_.push_back(std::move(cells));
}

void Table::add_footer(const std::string& key, double value) {
  footers_.emplace_back(key, value);
}

std::string Table::format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string Table::format_int(std::int64_t v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(v));
  return buf;
}

std::string Table::format_cell(const Cell& cell) {
  if (std::holds_alternative<std::int64_t>(cell))
    return format_int(std::get<std::int64_t>(cell));
  if (std::holds_alternative<double>(cell))
    return format_real(std::get<double>(cell));
  return std::get<std::string>(cell);
}

std::string Table::to_csv() const {
  std::string out;
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    if (c) out += ',';
    out += columns_[c];
  }
  out += '\n';
  for (const std::vector<Cell>& row : rows_) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += format_cell(row[c]);
    }
    out += '\n';
  }
  for (const auto& [key, value] : footers_) {
    out += "# ";
    out += key;
    out += ',';
    out += format_real(value);
    out += '\n';
  }
  return out;
}

std::string Table::to_json() const {
  std::string out = "[";
  bool first = true;
  auto open_element = [&] {
    out += first ? "\n" : ",\n";
    first = false;
  };
  for (const std::vector<Cell>& row : rows_) {
    open_element();
    out += '{';
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += '"';
      out += json_escape(columns_[c]);
      out += "\":";
      if (std::holds_alternative<std::string>(row[c])) {
        out += '"';
        out += json_escape(std::get<std::string>(row[c]));
        out += '"';
      } else {
        out += format_cell(row[c]);
      }
    }
    out += '}';
  }
  if (!footers_.empty()) {
    open_element();
    out += '{';
    for (std::size_t f = 0; f < footers_.size(); ++f) {
      if (f) out += ',';
      out += '"';
      out += json_escape(footers_[f].first);
      out += "\":";
      out += format_real(footers_[f].second);
    }
    out += '}';
  }
  out += "\n]\n";
  return out;
}

Table Table::from_csv(const std::string& text) {
  std::vector<std::string> lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw std::invalid_argument("from_csv: empty input");

  Table table(split(lines[0], ','));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (line.rfind("# ", 0) == 0) {
      const std::vector<std::string> kv = split(line.substr(2), ',');
      if (kv.size() != 2)
        throw std::invalid_argument("from_csv: malformed footer line");
      table.add_footer(kv[0], std::strtod(kv[1].c_str(), nullptr));
      continue;
    }
    const std::vector<std::string> parts = split(line, ',');
    std::vector<Cell> cells;
    cells.reserve(parts.size());
    for (const std::string& part : parts) cells.push_back(parse_cell(part));
    table.add_row(std::move(cells));
  }
  return table;
}

}  // namespace hyperball
