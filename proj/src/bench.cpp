#include "tstar/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "tstar/fast.hpp"
#include "tstar/random.hpp"

namespace tstar::bench {

std::optional<Distribution> parse_distribution(std::string_view name) {
  if (name == "independent") return Distribution::Independent;
  if (name == "monotone") return Distribution::Monotone;
  if (name == "mixed-ties") return Distribution::MixedTies;
  return std::nullopt;
}

std::string_view distribution_name(Distribution d) noexcept {
  switch (d) {
    case Distribution::Independent: return "independent";
    case Distribution::Monotone: return "monotone";
    case Distribution::MixedTies: return "mixed-ties";
  }
  return "unknown";
}

Dataset generate(Distribution dist, std::size_t n, std::uint64_t seed) {
  CounterRng rng(seed, n);
  std::vector<double> xs(n), ys(n);
  const std::uint64_t alphabet = std::max<std::uint64_t>(1, (n + 9) / 10);
  for (std::size_t i = 0; i < n; ++i) {
    switch (dist) {
      case Distribution::Independent:
        xs[i] = rng.uniform();
        ys[i] = rng.uniform();
        break;
      case Distribution::Monotone:
        xs[i] = rng.uniform();
        ys[i] = xs[i];
        break;
      case Distribution::MixedTies:
        xs[i] = static_cast<double>(1 + rng.below(alphabet));
        ys[i] = rng.below(2) == 0 ? xs[i] : static_cast<double>(1 + rng.below(alphabet));
        break;
    }
  }
  return validate(xs, ys);
}

std::vector<Row> run(std::span<const std::size_t> sizes, unsigned repeats, Distribution dist,
                     std::uint64_t seed, std::size_t max_grid_cells) {
  using clock = std::chrono::steady_clock;
  FastOptions opts;
  opts.max_grid_cells = max_grid_cells;
  opts.check_untied = false;

  std::vector<Row> rows;
  for (const std::size_t n : sizes) {
    const Dataset d = generate(dist, n, seed);
    Row row;
    row.n = n;
    std::vector<double> times;
    for (unsigned rep = 0; rep < std::max(1u, repeats); ++rep) {
      const auto start = clock::now();
      const TauStarResult r = tstar_fast(d, opts);
      times.push_back(std::chrono::duration<double, std::milli>(clock::now() - start).count());
      row.m_x = r.m_x;
      row.m_y = r.m_y;
    }
    std::sort(times.begin(), times.end());
    const std::size_t mid = times.size() / 2;
    row.median_ms = times.size() % 2 ? times[mid] : 0.5 * (times[mid - 1] + times[mid]);
    if (!rows.empty() && rows.back().median_ms > 0.0 && rows.back().n > 0 && n != rows.back().n) {
      row.ratio = row.median_ms / rows.back().median_ms;
      row.exponent = std::log(*row.ratio) /
                     std::log(static_cast<double>(n) / static_cast<double>(rows.back().n));
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace tstar::bench
