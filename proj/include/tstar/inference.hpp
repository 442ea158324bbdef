#pragma once

#include <cstddef>
#include <cstdint>

#include "tstar/core.hpp"
#include "tstar/fast.hpp"

namespace tstar {

struct PermutationOptions {
  std::size_t max_grid_cells = kDefaultMaxGridCells;
  unsigned threads = 1;  // 0 = hardware concurrency
};

struct PermutationTestResult {
  TauStarResult observed;
  std::uint64_t permutations = 0;
  std::uint64_t seed = 0;
  std::uint64_t exceed_count = 0;
  double p_value = 1.0;  // (1 + exceed_count) / (permutations + 1)
};

/// One-sided Monte Carlo test of independence: rejects for large t*.
/// Permutation b (1-based) shuffles ys by Fisher-Yates driven by
/// CounterRng(seed, b); permuted statistics >= observed count as exceedances.
/// Results do not depend on the thread count.
/// Throws TooFewSamples, InvalidPermutationCount (permutations < 1), GridTooLarge.
PermutationTestResult permutation_test(const Dataset& d, long long permutations,
                                       std::uint64_t seed,
                                       const PermutationOptions& opts = {});

/// The permutation of 0..n-1 applied to ys for permutation index b.
std::vector<std::size_t> permutation_for_index(std::size_t n, std::uint64_t seed,
                                               std::uint64_t b);

/// Statistic of the data with ys permuted by permutation_for_index(n, seed, b).
TauStarResult permuted_statistic(const Dataset& d, std::uint64_t seed, std::uint64_t b,
                                 std::size_t max_grid_cells = kDefaultMaxGridCells);

}  // namespace tstar
