#include "tstar/fast.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace tstar {

std::string_view method_label(Method m) noexcept {
  switch (m) {
    case Method::FastTied: return "fast-tied";
    case Method::FastUntied: return "fast-untied";
    case Method::Naive: return "naive";
  }
  return "unknown";
}

std::int64_t falling_factorial4(std::size_t n) {
  if (n < 4) throw TooFewSamples(n, 4);
  if (n > kMaxSamples) throw SampleTooLarge(n, kMaxSamples);
  const auto m = static_cast<std::int64_t>(n);
  return m * (m - 1) * (m - 2) * (m - 3);
}

std::uint64_t choose4(std::size_t n) noexcept {
  if (n < 4) return 0;
  const auto m = static_cast<std::uint64_t>(n);
  // Each partial product divided as soon as it is an exact multiple.
  return m * (m - 1) / 2 * (m - 2) / 3 * (m - 3) / 4;
}

MCounts m_counts(const CdfGrid& g, RankPair k, RankPair l) noexcept {
  const Rank r = std::min(k.x, l.x) - 1;
  const Rank smin = std::min(k.y, l.y);
  const Rank smax = std::max(k.y, l.y);
  const auto row = g.row(r);
  return {row[smin - 1], row[g.m_y()] - row[smax]};
}

PairCounts pair_counts(const CdfGrid& g, const TiePairGrid& t, RankPair k, RankPair l) noexcept {
  assert(k.x <= l.x && k.y != l.y);
  const Rank r = k.x - 1;
  const Rank smin = std::min(k.y, l.y);
  const Rank smax = std::max(k.y, l.y);
  const auto a = g.row(r);
  const auto a2 = t.row(r);
  PairCounts pc;
  pc.bot = a[smin - 1];
  pc.eq_min = a[smin] - a[smin - 1];
  pc.mid = a[smax - 1] - a[smin];
  pc.eq_max = a[smax] - a[smax - 1];
  pc.top = a[g.m_y()] - a[smax];
  pc.tie_correction = a2[smax - 1] - a2[smin];
  return pc;
}

std::uint64_t nd_pair(const PairCounts& pc, bool y_equal) noexcept {
  if (y_equal) return 0;
  const std::uint64_t positive = pc.top * (pc.mid + pc.eq_min + pc.bot) +
                                 pc.bot * (pc.mid + pc.eq_max) +
                                 pc.eq_min * (pc.mid + pc.eq_max) + pc.eq_max * pc.mid +
                                 choose2(pc.mid);
  // tie_correction counts a subset of the C(mid,2) pairs.
  assert(positive >= pc.tie_correction);
  return positive - pc.tie_correction;
}

namespace {

void require_four(const RankedDataset& rd) {
  if (rd.size() < 4) throw TooFewSamples(rd.size(), 4);
}

}  // namespace

std::uint64_t count_concordant(const CdfGrid& g, const RankedDataset& rd) {
  require_four(rd);
  const auto& pts = rd.points;
  const Rank m_y = g.m_y();
  std::uint64_t total = 0;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    // Sorted by x, so min(rx_k, rx_l) = rx_k for every later l.
    const auto row = g.row(pts[k].x - 1);
    const std::uint64_t left = row[m_y];
    if (left < 2) continue;
    const Rank yk = pts[k].y;
    for (std::size_t l = k + 1; l < pts.size(); ++l) {
      const Rank yl = pts[l].y;
      const Rank smin = yk < yl ? yk : yl;
      const Rank smax = yk < yl ? yl : yk;
      total += choose2(row[smin - 1]) + choose2(left - row[smax]);
    }
  }
  return total;
}

std::uint64_t count_discordant(const CdfGrid& g, const TiePairGrid& t, const RankedDataset& rd) {
  require_four(rd);
  const auto& pts = rd.points;
  std::uint64_t total = 0;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (cum_count_x(g, pts[k].x - 1) < 2) continue;
    for (std::size_t l = k + 1; l < pts.size(); ++l) {
      if (pts[k].y == pts[l].y) continue;
      total += nd_pair(pair_counts(g, t, pts[k], pts[l]), false);
    }
  }
  return total;
}

Rational untied_reduction(std::uint64_t n_c, std::size_t n) {
  const __int128 den = falling_factorial4(n);
  // 24*n_c/den - 1/3 = (72*n_c - den) / (3*den)
  return {72 * static_cast<__int128>(n_c) - den, 3 * den};
}

bool same_rational(const Rational& a, const Rational& b) noexcept {
  return a.num * b.den == b.num * a.den;
}

TauStarResult tstar_from_ranked(const RankedDataset& rd, const FastOptions& opts) {
  require_four(rd);
  const std::int64_t denominator = falling_factorial4(rd.size());
  const std::size_t cells = grid_cells(rd.m_x, rd.m_y);
  if (cells > opts.max_grid_cells / 2) throw GridTooLarge(2 * cells, opts.max_grid_cells);

  const CdfGrid g = build_cdf_grid(rd, opts.max_grid_cells);
  const std::uint64_t n_c = count_concordant(g, rd);
  std::uint64_t n_d = 0;
  {
    const TiePairGrid t = build_tie_pair_grid(rd, opts.max_grid_cells);
    n_d = count_discordant(g, t, rd);
  }

  TauStarResult res;
  res.n = rd.size();
  res.m_x = rd.m_x;
  res.m_y = rd.m_y;
  res.n_c = n_c;
  res.n_d = n_d;
  res.numerator = 16 * static_cast<std::int64_t>(n_c) - 8 * static_cast<std::int64_t>(n_d);
  res.denominator = denominator;
  res.tstar = static_cast<double>(res.numerator) / static_cast<double>(denominator);
  const bool untied = rd.m_x == rd.size() && rd.m_y == rd.size();
  res.method = untied ? Method::FastUntied : Method::FastTied;

  if (opts.check_untied && untied &&
      !same_rational(untied_reduction(n_c, res.n), Rational{res.numerator, denominator})) {
    throw std::logic_error("untied and tied reductions disagree");
  }
  return res;
}

TauStarResult tstar_fast(const Dataset& d, const FastOptions& opts) {
  if (d.size() < 4) throw TooFewSamples(d.size(), 4);
  if (d.size() > kMaxSamples) throw SampleTooLarge(d.size(), kMaxSamples);
  return tstar_from_ranked(to_ranked(d), opts);
}

}  // namespace tstar
