#include "tstar/csv.hpp"

#include <algorithm>
#include <charconv>
#include <string>

namespace tstar::csv {

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    fields.emplace_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

Table read(std::istream& in, bool has_header) {
  Table table;
  std::string line;
  std::size_t line_no = 0;
  std::size_t first_blank = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) {
      if (first_blank == 0) first_blank = line_no;
      continue;
    }
    if (first_blank != 0) throw ParseError(first_blank, "empty line inside data");

    auto fields = split(line);
    if (table.columns == 0) {
      table.columns = fields.size();
    } else if (fields.size() != table.columns) {
      throw ParseError(line_no, "expected " + std::to_string(table.columns) + " fields, found " +
                                    std::to_string(fields.size()));
    }
    if (has_header && table.header.empty()) {
      table.header = std::move(fields);
    } else {
      table.rows.push_back(std::move(fields));
      table.line_numbers.push_back(line_no);
    }
  }
  if (in.bad()) throw ParseError(line_no, "read failure");
  return table;
}

std::size_t resolve_column(const Table& table, std::string_view selector) {
  if (all_digits(selector)) {
    std::size_t index = 0;
    std::from_chars(selector.data(), selector.data() + selector.size(), index);
    if (index >= table.columns && !(table.columns == 0 && table.rows.empty())) {
      throw ColumnError("column index " + std::string(selector) + " out of range (" +
                        std::to_string(table.columns) + " columns)");
    }
    return index;
  }
  const auto it = std::find(table.header.begin(), table.header.end(), selector);
  if (it == table.header.end()) {
    throw ColumnError("no column named '" + std::string(selector) + "'" +
                      (table.header.empty() ? " (input read without --header)" : ""));
  }
  return static_cast<std::size_t>(it - table.header.begin());
}

std::vector<double> numeric_column(const Table& table, std::size_t column) {
  std::vector<double> values;
  values.reserve(table.rows.size());
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const std::string& field = table.rows[i].at(column);
    double v = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    if (!field.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (field.empty() || ec != std::errc() || ptr != last) {
      throw ParseError(table.line_numbers[i], "not a number: '" + field + "'");
    }
    values.push_back(v);
  }
  return values;
}

}  // namespace tstar::csv
