#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "bbmatch/error.hpp"

namespace bbm {

enum class Color : std::uint8_t { Red, Blue };

constexpr Color opposite(Color c) noexcept { return c == Color::Red ? Color::Blue : Color::Red; }
char to_char(Color c) noexcept;

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

struct ColoredPoint {
  double x = 0.0;
  double y = 0.0;
  Color color = Color::Red;

  Point2 position() const noexcept { return {x, y}; }
  friend bool operator==(const ColoredPoint&, const ColoredPoint&) = default;
};

/// Unordered index pair as produced by the solvers; stored with first < second.
using IndexPair = std::pair<int, int>;

inline IndexPair normalized(int a, int b) noexcept { return a < b ? IndexPair{a, b} : IndexPair{b, a}; }

/// True iff the chords (a.first, a.second) and (b.first, b.second) of a convex
/// polygon interleave. Decided purely on indices; throws SharedEndpoint if the
/// two pairs have an index in common.
bool chords_cross(IndexPair a, IndexPair b);

/// A balanced, strictly convex, counter-clockwise 2-colored point set.
///
/// Points are indexed 0..size()-1 and all index arithmetic is cyclic. A
/// cyclic interval <i..j> runs from i to j in the positive direction, both
/// ends included; <i..i-1> is the whole set.
class Instance {
 public:
  /// Validates `points` and precomputes prefix balances and exterior angles.
  /// Throws Error with OddCount, UnbalancedColors, DuplicatePoint,
  /// NonFiniteCoordinate or NotStrictlyConvex.
  static Instance validate(std::vector<ColoredPoint> points);

  int size() const noexcept { return static_cast<int>(points_.size()); }
  int pair_count() const noexcept { return size() / 2; }

  const std::vector<ColoredPoint>& points() const noexcept { return points_; }
  const ColoredPoint& point(int i) const noexcept { return points_[static_cast<std::size_t>(i)]; }
  Color color(int i) const noexcept { return point(i).color; }
  bool is_red(int i) const noexcept { return color(i) == Color::Red; }

  /// z[i] = (#red - #blue) among points 0..i-1; length size()+1.
  const std::vector<int>& prefix_balance() const noexcept { return prefix_; }

  int wrap(int i) const noexcept {
    const int n = size();
    i %= n;
    return i < 0 ? i + n : i;
  }
  int next(int i) const noexcept { return i + 1 == size() ? 0 : i + 1; }
  int prev(int i) const noexcept { return i == 0 ? size() - 1 : i - 1; }

  /// Number of steps from i to j in the positive direction, in [0, size()).
  int offset(int i, int j) const noexcept {
    const int d = j - i;
    return d < 0 ? d + size() : d;
  }
  int interval_length(int i, int j) const noexcept { return offset(i, j) + 1; }
  bool in_interval(int i, int j, int k) const noexcept { return offset(i, k) <= offset(i, j); }

  /// Red minus blue count of <i..j>.
  int interval_excess(int i, int j) const noexcept {
    // z[size()] == 0, so the wrapped case collapses to the same difference.
    return prefix_[static_cast<std::size_t>(j) + 1] - prefix_[static_cast<std::size_t>(i)];
  }
  bool is_balanced(int i, int j) const noexcept { return interval_excess(i, j) == 0; }

  double dist_sq(int i, int j) const noexcept {
    const double dx = point(i).x - point(j).x;
    const double dy = point(i).y - point(j).y;
    return dx * dx + dy * dy;
  }

  /// Counter-clockwise exterior angle at vertex m, in (0, pi).
  double exterior_angle(int m) const noexcept { return exterior_[static_cast<std::size_t>(m)]; }

  /// Angle by which v_i v_{i+1} turns to align with v_{j-1} v_j: the sum of
  /// exterior angles over the interior vertices of <i..j>. O(1).
  double turning_angle(int i, int j) const noexcept;

 private:
  explicit Instance(std::vector<ColoredPoint> points);

  std::vector<ColoredPoint> points_;
  std::vector<int> prefix_;
  std::vector<double> exterior_;
  std::vector<double> exterior_prefix_;
};

/// Checks that `points` is a strictly convex counter-clockwise cycle with
/// finite, pairwise distinct coordinates. Throws NonFiniteCoordinate,
/// DuplicatePoint or NotStrictlyConvex. Collinear triples are rejected.
void check_convex_position(std::span<const Point2> points);

}  // namespace bbm
