#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "tstar/errors.hpp"

namespace tstar::csv {

/// Malformed input; line() is 1-based and counts the header row.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Unknown or out-of-range column selector.
class ColumnError : public Error {
 public:
  using Error::Error;
};

struct Table {
  std::vector<std::string> header;  // empty unless read with has_header
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> line_numbers;  // source line of each row
  std::size_t columns = 0;
};

/// Comma-separated fields, no quoting. Every row must have the same number of
/// fields as the first row (or the header). Empty lines are only allowed at
/// the end of the input.
Table read(std::istream& in, bool has_header);

/// Selector is a 0-based index or, when the table has a header, a column name.
std::size_t resolve_column(const Table& table, std::string_view selector);

/// Parses one column as doubles; a field that is not a number is a ParseError
/// citing its line. "nan" and "inf" parse and are rejected later by validation.
std::vector<double> numeric_column(const Table& table, std::size_t column);

}  // namespace tstar::csv
