#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tstar/errors.hpp"

namespace tstar {

using Rank = std::uint32_t;

/// Paired observations (x_i, y_i). Construction through validate() guarantees
/// equal lengths and finite values; n may be anything, the statistics check
/// n >= 4 themselves.
class Dataset {
 public:
  Dataset() = default;

  std::size_t size() const noexcept { return xs_.size(); }
  std::span<const double> xs() const noexcept { return xs_; }
  std::span<const double> ys() const noexcept { return ys_; }

  friend Dataset validate(std::span<const double> xs, std::span<const double> ys);

 private:
  Dataset(std::vector<double> xs, std::vector<double> ys)
      : xs_(std::move(xs)), ys_(std::move(ys)) {}

  std::vector<double> xs_;
  std::vector<double> ys_;
};

/// Throws LengthMismatch or NonFiniteValue.
Dataset validate(std::span<const double> xs, std::span<const double> ys);

/// Dense ranks in 1..m, m = number of distinct values. Exact double equality
/// defines a tie.
std::vector<Rank> rank_dense(std::span<const double> values);

/// Number of distinct ranks, assuming dense ranks as produced by rank_dense.
Rank distinct_count(std::span<const Rank> ranks) noexcept;

struct RankPair {
  Rank x = 0;
  Rank y = 0;
  friend bool operator==(const RankPair&, const RankPair&) = default;
};

/// Jointly ranked sample, sorted by x-rank ascending. Within equal x-ranks
/// the order is by y-rank and then original index; nothing downstream may
/// depend on it.
struct RankedDataset {
  std::vector<RankPair> points;
  Rank m_x = 0;
  Rank m_y = 0;

  std::size_t size() const noexcept { return points.size(); }
};

RankedDataset to_ranked(const Dataset& d);

/// Builds the sorted representation from per-observation ranks that are
/// already dense (used by the permutation test, which re-pairs ranks).
RankedDataset ranked_from_ranks(std::span<const Rank> rx, std::span<const Rank> ry,
                                Rank m_x, Rank m_y);

/// Checks every RankedDataset invariant: sorted by x, each coordinate uses
/// every rank in 1..m at least once.
bool satisfies_invariants(const RankedDataset& rd) noexcept;

}  // namespace tstar
