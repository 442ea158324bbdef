#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tstar {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LengthMismatch : public Error {
 public:
  LengthMismatch(std::size_t x_size, std::size_t y_size);
  std::size_t x_size() const noexcept { return x_size_; }
  std::size_t y_size() const noexcept { return y_size_; }

 private:
  std::size_t x_size_;
  std::size_t y_size_;
};

class NonFiniteValue : public Error {
 public:
  enum class Column { X, Y };
  NonFiniteValue(Column column, std::size_t index);
  Column column() const noexcept { return column_; }
  std::size_t index() const noexcept { return index_; }

 private:
  Column column_;
  std::size_t index_;
};

class TooFewSamples : public Error {
 public:
  TooFewSamples(std::size_t n, std::size_t required);
  std::size_t n() const noexcept { return n_; }

 private:
  std::size_t n_;
};

// Raised when n is so large that the exact 64-bit counts could overflow.
class SampleTooLarge : public Error {
 public:
  SampleTooLarge(std::size_t n, std::size_t limit);
};

class GridTooLarge : public Error {
 public:
  GridTooLarge(std::size_t cells, std::size_t budget);
  std::size_t cells() const noexcept { return cells_; }
  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t cells_;
  std::size_t budget_;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class InvalidPermutationCount : public Error {
 public:
  explicit InvalidPermutationCount(long long count);
};

}  // namespace tstar
