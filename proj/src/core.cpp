#include "tstar/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace tstar {

LengthMismatch::LengthMismatch(std::size_t x_size, std::size_t y_size)
    : Error("length mismatch: xs has " + std::to_string(x_size) + " values, ys has " +
            std::to_string(y_size)),
      x_size_(x_size),
      y_size_(y_size) {}

NonFiniteValue::NonFiniteValue(Column column, std::size_t index)
    : Error(std::string("non-finite value in ") + (column == Column::X ? "xs" : "ys") +
            " at index " + std::to_string(index)),
      column_(column),
      index_(index) {}

TooFewSamples::TooFewSamples(std::size_t n, std::size_t required)
    : Error("too few samples: n = " + std::to_string(n) + ", need at least " +
            std::to_string(required)),
      n_(n) {}

SampleTooLarge::SampleTooLarge(std::size_t n, std::size_t limit)
    : Error("sample too large for exact 64-bit counts: n = " + std::to_string(n) +
            ", limit " + std::to_string(limit)) {}

GridTooLarge::GridTooLarge(std::size_t cells, std::size_t budget)
    : Error("grid too large: " + std::to_string(cells) + " cells exceed the budget of " +
            std::to_string(budget)),
      cells_(cells),
      budget_(budget) {}

InvalidPermutationCount::InvalidPermutationCount(long long count)
    : Error("invalid permutation count " + std::to_string(count) + ", need at least 1") {}

Dataset validate(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw LengthMismatch(xs.size(), ys.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!std::isfinite(xs[i])) throw NonFiniteValue(NonFiniteValue::Column::X, i);
    if (!std::isfinite(ys[i])) throw NonFiniteValue(NonFiniteValue::Column::Y, i);
  }
  return Dataset(std::vector<double>(xs.begin(), xs.end()),
                 std::vector<double>(ys.begin(), ys.end()));
}

std::vector<Rank> rank_dense(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

  std::vector<Rank> ranks(values.size());
  Rank current = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || values[order[i]] != values[order[i - 1]]) ++current;
    ranks[order[i]] = current;
  }
  return ranks;
}

Rank distinct_count(std::span<const Rank> ranks) noexcept {
  return ranks.empty() ? 0 : *std::max_element(ranks.begin(), ranks.end());
}

RankedDataset ranked_from_ranks(std::span<const Rank> rx, std::span<const Rank> ry, Rank m_x,
                                Rank m_y) {
  if (rx.size() != ry.size()) throw LengthMismatch(rx.size(), ry.size());
  std::vector<std::size_t> order(rx.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (rx[a] != rx[b]) return rx[a] < rx[b];
    if (ry[a] != ry[b]) return ry[a] < ry[b];
    return a < b;
  });

  RankedDataset rd;
  rd.m_x = m_x;
  rd.m_y = m_y;
  rd.points.reserve(order.size());
  for (std::size_t i : order) rd.points.push_back({rx[i], ry[i]});
  return rd;
}

RankedDataset to_ranked(const Dataset& d) {
  const auto rx = rank_dense(d.xs());
  const auto ry = rank_dense(d.ys());
  return ranked_from_ranks(rx, ry, distinct_count(rx), distinct_count(ry));
}

bool satisfies_invariants(const RankedDataset& rd) noexcept {
  std::vector<bool> seen_x(static_cast<std::size_t>(rd.m_x) + 1, false);
  std::vector<bool> seen_y(static_cast<std::size_t>(rd.m_y) + 1, false);
  for (std::size_t i = 0; i < rd.points.size(); ++i) {
    const auto [x, y] = rd.points[i];
    if (x < 1 || x > rd.m_x || y < 1 || y > rd.m_y) return false;
    if (i > 0 && rd.points[i - 1].x > x) return false;
    seen_x[x] = true;
    seen_y[y] = true;
  }
  const auto all_seen = [](const std::vector<bool>& seen) {
    return std::all_of(seen.begin() + 1, seen.end(), [](bool b) { return b; });
  };
  return all_seen(seen_x) && all_seen(seen_y);
}

}  // namespace tstar
