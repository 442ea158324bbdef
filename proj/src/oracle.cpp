#include "tstar/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "tstar/fast.hpp"

namespace tstar::oracle {

namespace {

// Error-free difference: hi + lo == a - b exactly (Knuth's TwoSum).
struct ExactDiff {
  double hi;
  double lo;
};

ExactDiff two_diff(double a, double b) noexcept {
  const double hi = a - b;
  const double b_virtual = a - hi;
  const double a_virtual = hi + b_virtual;
  const double lo = (a - a_virtual) + (b_virtual - b);
  return {hi, lo};
}

// Nonoverlapping expansion grown one term at a time (Shewchuk's GROW-EXPANSION
// with zero elimination); its sign is the sign of the largest component.
class Expansion {
 public:
  void add(double b) noexcept {
    std::size_t out = 0;
    double q = b;
    for (std::size_t i = 0; i < size_; ++i) {
      const double sum = q + terms_[i];
      const double b_virtual = sum - q;
      const double a_virtual = sum - b_virtual;
      const double err = (q - a_virtual) + (terms_[i] - b_virtual);
      q = sum;
      if (err != 0.0) terms_[out++] = err;
    }
    if (q != 0.0) terms_[out++] = q;
    size_ = out;
  }

  int sign() const noexcept {
    if (size_ == 0) return 0;
    return terms_[size_ - 1] > 0.0 ? 1 : -1;
  }

 private:
  std::array<double, 9> terms_{};
  std::size_t size_ = 0;
};

void add_abs_diff(Expansion& e, double a, double b, double weight) noexcept {
  auto d = two_diff(a, b);
  if (d.hi < 0.0) weight = -weight;
  e.add(weight * d.hi);
  e.add(weight * d.lo);
}

}  // namespace

int a_sign(double z1, double z2, double z3, double z4) noexcept {
  // Evaluated exactly; plain floating point misreports the zero cases.
  Expansion e;
  add_abs_diff(e, z1, z2, 1.0);
  add_abs_diff(e, z3, z4, 1.0);
  add_abs_diff(e, z1, z3, -1.0);
  add_abs_diff(e, z2, z4, -1.0);
  return e.sign();
}

QuadrupleClass classify_quadruple(Point p1, Point p2, Point p3, Point p4) noexcept {
  std::array<Point, 4> p{p1, p2, p3, p4};
  std::sort(p.begin(), p.end(), [](const Point& a, const Point& b) { return a.x < b.x; });
  if (!(p[1].x < p[2].x)) return QuadrupleClass::Neither;

  const double y1 = p[0].y, y2 = p[1].y, y3 = p[2].y, y4 = p[3].y;
  if (std::max(y1, y2) < std::min(y3, y4) || std::min(y1, y2) > std::max(y3, y4)) {
    return QuadrupleClass::Concordant;
  }
  // Lower y-pair {low_a, high_a}, upper y-pair {low_b, high_b}.
  for (const auto& [low_a, low_b] : {std::pair{y1, y2}, std::pair{y2, y1}}) {
    for (const auto& [high_a, high_b] : {std::pair{y3, y4}, std::pair{y4, y3}}) {
      if (std::max(low_a, high_a) < std::min(low_b, high_b)) return QuadrupleClass::Discordant;
    }
  }
  return QuadrupleClass::Neither;
}

namespace {

void require_four(const Dataset& d) {
  if (d.size() < 4) throw TooFewSamples(d.size(), 4);
}

}  // namespace

QuadrupleCounts count_quadruples_naive(const Dataset& d) {
  require_four(d);
  const auto xs = d.xs();
  const auto ys = d.ys();
  const std::size_t n = d.size();
  const auto pt = [&](std::size_t i) { return Point{xs[i], ys[i]}; };

  QuadrupleCounts counts;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l) {
          switch (classify_quadruple(pt(i), pt(j), pt(k), pt(l))) {
            case QuadrupleClass::Concordant: ++counts.concordant; break;
            case QuadrupleClass::Discordant: ++counts.discordant; break;
            case QuadrupleClass::Neither: break;
          }
        }
  return counts;
}

NaiveStatistic tstar_naive(const Dataset& d) {
  require_four(d);
  const auto xs = d.xs();
  const auto ys = d.ys();
  const std::size_t n = d.size();

  std::int64_t sum = 0;
  std::array<std::size_t, 4> q{};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l) {
          q = {i, j, k, l};
          do {
            sum += a_sign(xs[q[0]], xs[q[1]], xs[q[2]], xs[q[3]]) *
                   a_sign(ys[q[0]], ys[q[1]], ys[q[2]], ys[q[3]]);
          } while (std::next_permutation(q.begin(), q.end()));
        }
  return {sum, falling_factorial4(n)};
}

}  // namespace tstar::oracle
