#pragma once

// Brute-force reference implementations. O(n^4); meant for verification
// and small inputs only.

#include <cstdint>

#include "tstar/core.hpp"

namespace tstar::oracle {

/// sign(|z1-z2| + |z3-z4| - |z1-z3| - |z2-z4|)
int a_sign(double z1, double z2, double z3, double z4) noexcept;

enum class QuadrupleClass { Concordant, Discordant, Neither };

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// Classifies an unordered set of four points.
///
/// The points are sorted by x; unless the second-smallest x is strictly below
/// the third-smallest there is no x-split and the result is Neither. With the
/// split (1,2 low, 3,4 high):
///   Concordant  max(y1,y2) < min(y3,y4) or min(y1,y2) > max(y3,y4).
///   Discordant  the four y values split strictly into a lower and an upper
///               pair, each holding one low-x and one high-x point.
/// Without ties in y the discordant clause is simply "not concordant". With
/// ties it is stricter than overlap of the two y-ranges: (y1,y2,y3,y4) =
/// (2,2,1,3) overlaps but is Neither.
QuadrupleClass classify_quadruple(Point p1, Point p2, Point p3, Point p4) noexcept;

struct QuadrupleCounts {
  std::uint64_t concordant = 0;
  std::uint64_t discordant = 0;
};

/// Classifies all C(n,4) subsets. Throws TooFewSamples for n < 4.
QuadrupleCounts count_quadruples_naive(const Dataset& d);

struct NaiveStatistic {
  std::int64_t sum = 0;          // sum over ordered distinct quadruples of a(x..)a(y..)
  std::int64_t denominator = 0;  // n(n-1)(n-2)(n-3)
  double tstar() const noexcept {
    return static_cast<double>(sum) / static_cast<double>(denominator);
  }
};

/// Direct evaluation of the defining sum. Every one of the 24 orderings of
/// each 4-subset is enumerated explicitly. Throws TooFewSamples for n < 4.
NaiveStatistic tstar_naive(const Dataset& d);

}  // namespace tstar::oracle
