#include "tstar/inference.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "tstar/random.hpp"

namespace tstar {

std::vector<std::size_t> permutation_for_index(std::size_t n, std::uint64_t seed,
                                               std::uint64_t b) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  CounterRng rng(seed, b);
  for (std::size_t i = n; i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i));
    std::swap(perm[i - 1], perm[j]);
  }
  return perm;
}

namespace {

// Per-observation ranks, computed once and re-paired per permutation.
struct RankColumns {
  std::vector<Rank> rx;
  std::vector<Rank> ry;
  Rank m_x = 0;
  Rank m_y = 0;

  explicit RankColumns(const Dataset& d)
      : rx(rank_dense(d.xs())), ry(rank_dense(d.ys())),
        m_x(distinct_count(rx)), m_y(distinct_count(ry)) {}

  TauStarResult permuted(std::uint64_t seed, std::uint64_t b, const FastOptions& opts) const {
    const auto perm = permutation_for_index(rx.size(), seed, b);
    std::vector<Rank> shuffled(ry.size());
    for (std::size_t i = 0; i < perm.size(); ++i) shuffled[i] = ry[perm[i]];
    return tstar_from_ranked(ranked_from_ranks(rx, shuffled, m_x, m_y), opts);
  }
};

FastOptions fast_options(std::size_t max_grid_cells) {
  FastOptions opts;
  opts.max_grid_cells = max_grid_cells;
  opts.check_untied = false;
  return opts;
}

}  // namespace

TauStarResult permuted_statistic(const Dataset& d, std::uint64_t seed, std::uint64_t b,
                                 std::size_t max_grid_cells) {
  if (d.size() < 4) throw TooFewSamples(d.size(), 4);
  return RankColumns(d).permuted(seed, b, fast_options(max_grid_cells));
}

PermutationTestResult permutation_test(const Dataset& d, long long permutations,
                                       std::uint64_t seed, const PermutationOptions& opts) {
  if (d.size() < 4) throw TooFewSamples(d.size(), 4);
  if (permutations < 1) throw InvalidPermutationCount(permutations);

  const FastOptions fopts = fast_options(opts.max_grid_cells);
  PermutationTestResult res;
  res.observed = tstar_fast(d, fopts);
  res.permutations = static_cast<std::uint64_t>(permutations);
  res.seed = seed;

  const RankColumns columns(d);
  const std::int64_t observed = res.observed.numerator;  // common denominator
  std::atomic<std::uint64_t> next_index{1};
  std::atomic<std::uint64_t> exceed{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};

  const auto worker = [&] {
    std::uint64_t local = 0;
    try {
      for (std::uint64_t b = next_index++; b <= res.permutations && !failed; b = next_index++) {
        if (columns.permuted(seed, b, fopts).numerator >= observed) ++local;
      }
    } catch (...) {
      if (!failed.exchange(true)) failure = std::current_exception();
    }
    exceed += local;
  };

  unsigned threads = opts.threads == 0 ? std::thread::hardware_concurrency() : opts.threads;
  threads = static_cast<unsigned>(
      std::clamp<std::uint64_t>(threads, 1, std::max<std::uint64_t>(1, res.permutations)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  res.exceed_count = exceed;
  res.p_value = static_cast<double>(1 + res.exceed_count) /
                static_cast<double>(res.permutations + 1);
  return res;
}

}  // namespace tstar
