#pragma once

// Shared generators and brute-force references for the test suites. Nothing
// here calls into the grid or fast code.

#include <cstdint>
#include <vector>

#include "tstar/core.hpp"
#include "tstar/random.hpp"

namespace tstar::testing {

// Distinct values: random integers below 2^40, exact in double arithmetic.
inline std::vector<double> continuous(std::size_t n, CounterRng& rng) {
  std::vector<double> v(n);
  for (auto& x : v) x = static_cast<double>(rng.below(std::uint64_t{1} << 40));
  return v;
}

// Heavy ties: values drawn from {1..alphabet}.
inline std::vector<double> alphabet_draws(std::size_t n, std::uint64_t alphabet, CounterRng& rng) {
  std::vector<double> v(n);
  for (auto& x : v) x = static_cast<double>(1 + rng.below(alphabet));
  return v;
}

inline Dataset make(const std::vector<double>& xs, const std::vector<double>& ys) {
  return validate(xs, ys);
}

// #{i : rx_i <= r and ry_i <= s} by direct scan.
inline std::uint64_t brute_cdf(const RankedDataset& rd, Rank r, Rank s) {
  std::uint64_t c = 0;
  for (const auto& p : rd.points) c += (p.x <= r && p.y <= s);
  return c;
}

// sum_{s' <= s} C(#{i : rx_i <= r and ry_i = s'}, 2) by direct scan.
inline std::uint64_t brute_tie_pairs(const RankedDataset& rd, Rank r, Rank s) {
  std::uint64_t total = 0;
  for (Rank level = 1; level <= s; ++level) {
    std::uint64_t c = 0;
    for (const auto& p : rd.points) c += (p.x <= r && p.y == level);
    if (c >= 2) total += c * (c - 1) / 2;
  }
  return total;
}

}  // namespace tstar::testing
