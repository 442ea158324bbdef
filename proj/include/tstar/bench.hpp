#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "tstar/core.hpp"
#include "tstar/grid.hpp"

namespace tstar::bench {

/// Synthetic inputs, all drawn from CounterRng(seed, n):
///   independent  x, y i.i.d. uniform on [0,1).
///   monotone     x uniform on [0,1), y = x.
///   mixed-ties   x uniform on {1..ceil(n/10)}; y = x with probability 1/2,
///                otherwise an independent draw from the same alphabet.
enum class Distribution { Independent, Monotone, MixedTies };

std::optional<Distribution> parse_distribution(std::string_view name);
std::string_view distribution_name(Distribution d) noexcept;

Dataset generate(Distribution dist, std::size_t n, std::uint64_t seed);

struct Row {
  std::size_t n = 0;
  Rank m_x = 0;
  Rank m_y = 0;
  double median_ms = 0.0;
  std::optional<double> ratio;     // median_ms / previous row's median_ms
  std::optional<double> exponent;  // log(ratio) / log(n / previous n)
};

/// Times tstar_fast (median over repeats) for each size in order.
std::vector<Row> run(std::span<const std::size_t> sizes, unsigned repeats, Distribution dist,
                     std::uint64_t seed, std::size_t max_grid_cells = kDefaultMaxGridCells);

}  // namespace tstar::bench
