#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tstar/core.hpp"

namespace tstar {

inline constexpr std::size_t kDefaultMaxGridCells = 2'000'000'000;

/// Dense row-major (m_x+1) x (m_y+1) grid of 64-bit cells; row r, column s.
/// Row 0 and column 0 are identically zero.
class CountGrid {
 public:
  CountGrid() = default;
  CountGrid(Rank m_x, Rank m_y);

  Rank m_x() const noexcept { return m_x_; }
  Rank m_y() const noexcept { return m_y_; }

  std::uint64_t operator()(Rank r, Rank s) const noexcept { return cells_[index(r, s)]; }
  std::uint64_t& operator()(Rank r, Rank s) noexcept { return cells_[index(r, s)]; }

  /// Bounds-checked access; throws IndexOutOfRange.
  std::uint64_t at(Rank r, Rank s) const;

  std::span<const std::uint64_t> row(Rank r) const noexcept {
    return {cells_.data() + index(r, 0), stride()};
  }
  std::span<std::uint64_t> row(Rank r) noexcept {
    return {cells_.data() + index(r, 0), stride()};
  }

 private:
  std::size_t stride() const noexcept { return static_cast<std::size_t>(m_y_) + 1; }
  std::size_t index(Rank r, Rank s) const noexcept { return r * stride() + s; }

  Rank m_x_ = 0;
  Rank m_y_ = 0;
  std::vector<std::uint64_t> cells_;
};

/// A(r,s) = #{i : rx_i <= r and ry_i <= s}.
class CdfGrid {
 public:
  CdfGrid() = default;
  explicit CdfGrid(CountGrid cells) : cells_(std::move(cells)) {}

  Rank m_x() const noexcept { return cells_.m_x(); }
  Rank m_y() const noexcept { return cells_.m_y(); }
  std::uint64_t operator()(Rank r, Rank s) const noexcept { return cells_(r, s); }
  std::uint64_t at(Rank r, Rank s) const { return cells_.at(r, s); }
  std::span<const std::uint64_t> row(Rank r) const noexcept { return cells_.row(r); }

 private:
  CountGrid cells_;
};

/// A2(r,s) = sum_{s'<=s} C(R(r,s'), 2) with R(r,s') = #{i : rx_i <= r and ry_i = s'}.
class TiePairGrid {
 public:
  TiePairGrid() = default;
  explicit TiePairGrid(CountGrid cells) : cells_(std::move(cells)) {}

  Rank m_x() const noexcept { return cells_.m_x(); }
  Rank m_y() const noexcept { return cells_.m_y(); }
  std::uint64_t operator()(Rank r, Rank s) const noexcept { return cells_(r, s); }
  std::uint64_t at(Rank r, Rank s) const { return cells_.at(r, s); }
  std::span<const std::uint64_t> row(Rank r) const noexcept { return cells_.row(r); }

 private:
  CountGrid cells_;
};

/// Cells needed by one grid for the given rank counts.
std::size_t grid_cells(Rank m_x, Rank m_y) noexcept;

/// Both builders throw GridTooLarge when grid_cells(m_x, m_y) > max_cells.
CdfGrid build_cdf_grid(const RankedDataset& rd, std::size_t max_cells = kDefaultMaxGridCells);
TiePairGrid build_tie_pair_grid(const RankedDataset& rd,
                                std::size_t max_cells = kDefaultMaxGridCells);

/// A(r, m_y) = #{i : rx_i <= r}. Throws IndexOutOfRange for r > m_x.
std::uint64_t cum_count_x(const CdfGrid& g, Rank r);

}  // namespace tstar
