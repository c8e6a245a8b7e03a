#include "bbmatch/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace bbm {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OddCount: return "OddCount";
    case ErrorCode::UnbalancedColors: return "UnbalancedColors";
    case ErrorCode::NotStrictlyConvex: return "NotStrictlyConvex";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::NonFiniteCoordinate: return "NonFiniteCoordinate";
    case ErrorCode::SharedEndpoint: return "SharedEndpoint";
    case ErrorCode::NotOnCircle: return "NotOnCircle";
    case ErrorCode::NotADiagonal: return "NotADiagonal";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Incomparable: return "Incomparable";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

char to_char(Color c) noexcept { return c == Color::Red ? 'R' : 'B'; }

bool chords_cross(IndexPair a, IndexPair b) {
  if (a.first == b.first || a.first == b.second || a.second == b.first || a.second == b.second) {
    throw Error(ErrorCode::SharedEndpoint, "chords (" + std::to_string(a.first) + "," +
                                               std::to_string(a.second) + ") and (" +
                                               std::to_string(b.first) + "," +
                                               std::to_string(b.second) + ")");
  }
  const auto [lo, hi] = std::minmax(a.first, a.second);
  const bool first_inside = lo < b.first && b.first < hi;
  const bool second_inside = lo < b.second && b.second < hi;
  return first_inside != second_inside;
}

namespace {

double cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.x - o.x) * (b.y - a.y) - (a.y - o.y) * (b.x - a.x);
}

double exterior_angle_at(const Point2& before, const Point2& at, const Point2& after) {
  const double ux = at.x - before.x;
  const double uy = at.y - before.y;
  const double vx = after.x - at.x;
  const double vy = after.y - at.y;
  return std::atan2(ux * vy - uy * vx, ux * vx + uy * vy);
}

}  // namespace

void check_convex_position(std::span<const Point2> points) {
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(points[i].x) || !std::isfinite(points[i].y)) {
      throw Error(ErrorCode::NonFiniteCoordinate, "point " + std::to_string(i));
    }
  }

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return points[a].x != points[b].x ? points[a].x < points[b].x : points[a].y < points[b].y;
  });
  for (std::size_t k = 1; k < n; ++k) {
    if (points[order[k]] == points[order[k - 1]]) {
      throw Error(ErrorCode::DuplicatePoint,
                  "points " + std::to_string(order[k - 1]) + " and " + std::to_string(order[k]));
    }
  }

  if (n < 3) return;
  double total_turn = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = points[i];
    const Point2& b = points[(i + 1) % n];
    const Point2& c = points[(i + 2) % n];
    if (!(cross(a, b, c) > 0.0)) {
      throw Error(ErrorCode::NotStrictlyConvex,
                  "turn at point " + std::to_string((i + 1) % n) + " is not a strict left turn");
    }
    total_turn += exterior_angle_at(a, b, c);
  }
  // All left turns but winding more than once (a star polygon).
  if (total_turn > 3.0 * std::numbers::pi) {
    throw Error(ErrorCode::NotStrictlyConvex, "point cycle winds more than once");
  }
}

Instance::Instance(std::vector<ColoredPoint> points) : points_(std::move(points)) {
  const int n = size();
  prefix_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) {
    prefix_[static_cast<std::size_t>(i) + 1] = prefix_[static_cast<std::size_t>(i)] + (is_red(i) ? 1 : -1);
  }

  exterior_.assign(static_cast<std::size_t>(n), std::numbers::pi);
  if (n >= 3) {
    for (int m = 0; m < n; ++m) {
      exterior_[static_cast<std::size_t>(m)] =
          exterior_angle_at(point(prev(m)).position(), point(m).position(), point(next(m)).position());
    }
  }
  exterior_prefix_.assign(static_cast<std::size_t>(n) + 1, 0.0);
  for (int m = 0; m < n; ++m) {
    exterior_prefix_[static_cast<std::size_t>(m) + 1] =
        exterior_prefix_[static_cast<std::size_t>(m)] + exterior_[static_cast<std::size_t>(m)];
  }
}

Instance Instance::validate(std::vector<ColoredPoint> points) {
  if (points.size() < 2 || points.size() % 2 != 0) {
    throw Error(ErrorCode::OddCount, "expected an even number (>= 2) of points, got " +
                                         std::to_string(points.size()));
  }
  std::vector<Point2> positions;
  positions.reserve(points.size());
  long red = 0;
  for (const auto& p : points) {
    positions.push_back(p.position());
    red += p.color == Color::Red ? 1 : 0;
  }
  const long blue = static_cast<long>(points.size()) - red;
  if (red != blue) {
    throw Error(ErrorCode::UnbalancedColors,
                std::to_string(red) + " red vs " + std::to_string(blue) + " blue");
  }
  check_convex_position(positions);
  return Instance(std::move(points));
}

double Instance::turning_angle(int i, int j) const noexcept {
  if (interval_length(i, j) <= 2) return 0.0;
  const int a = next(i);
  const int b = prev(j);
  const auto& p = exterior_prefix_;
  const auto ua = static_cast<std::size_t>(a);
  const auto ub = static_cast<std::size_t>(b);
  if (a <= b) return p[ub + 1] - p[ua];
  return (p.back() - p[ua]) + p[ub + 1];
}

}  // namespace bbm
