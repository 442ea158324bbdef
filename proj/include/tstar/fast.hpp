#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "tstar/core.hpp"
#include "tstar/grid.hpp"

namespace tstar {

enum class Method { FastTied, FastUntied, Naive };

std::string_view method_label(Method m) noexcept;

/// Largest n for which n(n-1)(n-2)(n-3) and 16*C(n,4) stay inside int64.
inline constexpr std::size_t kMaxSamples = 55'000;

struct TauStarResult {
  std::size_t n = 0;
  Rank m_x = 0;
  Rank m_y = 0;
  std::uint64_t n_c = 0;
  std::uint64_t n_d = 0;
  std::int64_t numerator = 0;    // 16*n_c - 8*n_d
  std::int64_t denominator = 0;  // n(n-1)(n-2)(n-3), not reduced
  double tstar = 0.0;
  Method method = Method::FastTied;
};

/// n(n-1)(n-2)(n-3). Throws TooFewSamples / SampleTooLarge.
std::int64_t falling_factorial4(std::size_t n);

/// C(n,4) for n <= kMaxSamples.
std::uint64_t choose4(std::size_t n) noexcept;

constexpr std::uint64_t choose2(std::uint64_t m) noexcept {
  return m < 2 ? 0 : m * (m - 1) / 2;
}

/// Points strictly left of both pair members and strictly below (less) or
/// strictly above (greater) both.
struct MCounts {
  std::uint64_t less = 0;
  std::uint64_t greater = 0;
  friend bool operator==(const MCounts&, const MCounts&) = default;
};

MCounts m_counts(const CdfGrid& g, RankPair k, RankPair l) noexcept;

/// Sum of C(M_less,2) + C(M_greater,2) over all unordered pairs.
/// Throws TooFewSamples for n < 4.
std::uint64_t count_concordant(const CdfGrid& g, const RankedDataset& rd);

/// Band counts of the points with rx_i < rx_k relative to the pair's
/// y-interval [smin, smax]; tie_correction counts same-y pairs strictly
/// inside it.
struct PairCounts {
  std::uint64_t top = 0;
  std::uint64_t mid = 0;
  std::uint64_t bot = 0;
  std::uint64_t eq_min = 0;
  std::uint64_t eq_max = 0;
  std::uint64_t tie_correction = 0;
  friend bool operator==(const PairCounts&, const PairCounts&) = default;
};

/// Requires rx_k <= rx_l and ry_k != ry_l.
PairCounts pair_counts(const CdfGrid& g, const TiePairGrid& t, RankPair k, RankPair l) noexcept;

/// Discordant quadruples whose high-x pair is (k,l).
std::uint64_t nd_pair(const PairCounts& pc, bool y_equal) noexcept;

/// Throws TooFewSamples for n < 4.
std::uint64_t count_discordant(const CdfGrid& g, const TiePairGrid& t, const RankedDataset& rd);

struct FastOptions {
  std::size_t max_grid_cells = kDefaultMaxGridCells;
#ifdef NDEBUG
  bool check_untied = false;
#else
  bool check_untied = true;
#endif
};

/// O(n^2) statistic on already-ranked data.
TauStarResult tstar_from_ranked(const RankedDataset& rd, const FastOptions& opts = {});

/// Ranks, builds both grids, counts and reduces with 16*N_c - 8*N_d.
/// Throws TooFewSamples, SampleTooLarge, GridTooLarge.
TauStarResult tstar_fast(const Dataset& d, const FastOptions& opts = {});

struct Rational {
  __int128 num = 0;
  __int128 den = 1;
};

/// 24*N_c/(n)_4 - 1/3, the reduction valid only without ties.
Rational untied_reduction(std::uint64_t n_c, std::size_t n);

/// Exact equality of a/b and c/d by cross-multiplication.
bool same_rational(const Rational& a, const Rational& b) noexcept;

}  // namespace tstar
