#include "tstar/grid.hpp"

#include <limits>
#include <string>

#include "tstar/fast.hpp"

namespace tstar {

CountGrid::CountGrid(Rank m_x, Rank m_y)
    : m_x_(m_x), m_y_(m_y), cells_(grid_cells(m_x, m_y), 0) {}

std::uint64_t CountGrid::at(Rank r, Rank s) const {
  if (r > m_x_ || s > m_y_) {
    throw IndexOutOfRange("grid index (" + std::to_string(r) + ", " + std::to_string(s) +
                          ") outside 0.." + std::to_string(m_x_) + " x 0.." +
                          std::to_string(m_y_));
  }
  return (*this)(r, s);
}

std::size_t grid_cells(Rank m_x, Rank m_y) noexcept {
  return (static_cast<std::size_t>(m_x) + 1) * (static_cast<std::size_t>(m_y) + 1);
}

namespace {

void check_budget(const RankedDataset& rd, std::size_t max_cells) {
  const std::size_t cells = grid_cells(rd.m_x, rd.m_y);
  if (cells > max_cells) throw GridTooLarge(cells, max_cells);
}

// Number of observations at each rank pair.
CountGrid cell_counts(const RankedDataset& rd) {
  CountGrid b(rd.m_x, rd.m_y);
  for (const auto& p : rd.points) ++b(p.x, p.y);
  return b;
}

}  // namespace

CdfGrid build_cdf_grid(const RankedDataset& rd, std::size_t max_cells) {
  check_budget(rd, max_cells);
  CountGrid a = cell_counts(rd);
  // A(r,s) = A(r,s-1) + A(r-1,s) - A(r-1,s-1) + B(r,s), in place.
  for (Rank r = 1; r <= rd.m_x; ++r) {
    auto prev = a.row(r - 1);
    auto cur = a.row(r);
    for (Rank s = 1; s <= rd.m_y; ++s) cur[s] += cur[s - 1] + prev[s] - prev[s - 1];
  }
  return CdfGrid(std::move(a));
}

TiePairGrid build_tie_pair_grid(const RankedDataset& rd, std::size_t max_cells) {
  check_budget(rd, max_cells);
  // B -> R(r,s) = R(r-1,s) + B(r,s) -> A2(r,s) = A2(r,s-1) + C(R(r,s),2).
  CountGrid a2 = cell_counts(rd);
  std::vector<std::uint64_t> column_totals(static_cast<std::size_t>(rd.m_y) + 1, 0);
  for (Rank r = 1; r <= rd.m_x; ++r) {
    auto cur = a2.row(r);
    for (Rank s = 1; s <= rd.m_y; ++s) {
      column_totals[s] += cur[s];
      cur[s] = cur[s - 1] + choose2(column_totals[s]);
    }
  }
  return TiePairGrid(std::move(a2));
}

std::uint64_t cum_count_x(const CdfGrid& g, Rank r) {
  if (r > g.m_x()) {
    throw IndexOutOfRange("x-rank " + std::to_string(r) + " outside 0.." +
                          std::to_string(g.m_x()));
  }
  return g(r, g.m_y());
}

}  // namespace tstar
