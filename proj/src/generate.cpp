#include "bbmatch/generate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace bbm {

Shape parse_shape(std::string_view name) {
  if (name == "circle") return Shape::Circle;
  if (name == "convex") return Shape::Convex;
  throw Error(ErrorCode::Parse, "unknown shape '" + std::string(name) + "'");
}

Coloring parse_coloring(std::string_view name) {
  if (name == "random") return Coloring::RandomBalanced;
  if (name == "alternating") return Coloring::Alternating;
  if (name == "grouped") return Coloring::Grouped;
  throw Error(ErrorCode::Parse, "unknown coloring '" + std::string(name) + "'");
}

std::vector<Point2> random_circle_points(int count, std::mt19937_64& rng) {
  const double two_pi = 2.0 * std::numbers::pi;
  const double gap = std::min(1e-6, std::numbers::pi / count);
  // Uniform angles conditioned on a minimum gap: sort uniforms on a shortened
  // circle, then add k * gap to the k-th.
  std::uniform_real_distribution<double> angle(0.0, two_pi - gap * count);
  std::vector<double> theta(static_cast<std::size_t>(count));
  for (auto& t : theta) t = angle(rng);
  std::sort(theta.begin(), theta.end());
  std::vector<Point2> points;
  points.reserve(theta.size());
  for (std::size_t k = 0; k < theta.size(); ++k) {
    const double t = theta[k] + gap * static_cast<double>(k);
    points.push_back({std::cos(t), std::sin(t)});
  }
  return points;
}

namespace {

// Splits sorted coordinates into two monotone chains and returns the edge
// components; they sum to zero.
std::vector<double> chain_components(std::vector<double> coords, std::mt19937_64& rng) {
  std::sort(coords.begin(), coords.end());
  std::bernoulli_distribution coin(0.5);
  const std::size_t n = coords.size();
  std::vector<double> out;
  out.reserve(n);
  double last_a = coords.front();
  double last_b = coords.front();
  for (std::size_t k = 1; k + 1 < n; ++k) {
    if (coin(rng)) {
      out.push_back(coords[k] - last_a);
      last_a = coords[k];
    } else {
      out.push_back(last_b - coords[k]);
      last_b = coords[k];
    }
  }
  out.push_back(coords.back() - last_a);
  out.push_back(last_b - coords.back());
  return out;
}

}  // namespace

std::vector<Point2> random_convex_polygon(int count, std::mt19937_64& rng) {
  if (count < 3) return random_circle_points(count, rng);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (;;) {
    std::vector<double> xs(static_cast<std::size_t>(count));
    std::vector<double> ys(static_cast<std::size_t>(count));
    for (auto& v : xs) v = unit(rng);
    for (auto& v : ys) v = unit(rng);
    const auto dx = chain_components(std::move(xs), rng);
    auto dy = chain_components(std::move(ys), rng);
    std::shuffle(dy.begin(), dy.end(), rng);

    std::vector<std::size_t> order(dx.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<double> angle(dx.size());
    for (std::size_t k = 0; k < dx.size(); ++k) angle[k] = std::atan2(dy[k], dx[k]);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return angle[a] < angle[b]; });

    std::vector<Point2> points;
    points.reserve(dx.size());
    double x = 0.0;
    double y = 0.0;
    double min_x = 0.0, max_x = 0.0, min_y = 0.0, max_y = 0.0;
    for (const std::size_t k : order) {
      points.push_back({x, y});
      x += dx[k];
      y += dy[k];
      min_x = std::min(min_x, x);
      max_x = std::max(max_x, x);
      min_y = std::min(min_y, y);
      max_y = std::max(max_y, y);
    }
    const double cx = (min_x + max_x) / 2.0;
    const double cy = (min_y + max_y) / 2.0;
    const double scale = 2.0 / std::max(max_x - min_x, max_y - min_y);
    for (auto& p : points) p = {(p.x - cx) * scale, (p.y - cy) * scale};

    try {
      check_convex_position(points);
      return points;
    } catch (const Error&) {
      // Two edge vectors with equal direction; draw again.
    }
  }
}

std::vector<Color> make_colors(int n, Coloring coloring, std::mt19937_64& rng) {
  std::vector<Color> colors(2 * static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < colors.size(); ++k) {
    switch (coloring) {
      case Coloring::Alternating: colors[k] = k % 2 == 0 ? Color::Red : Color::Blue; break;
      case Coloring::Grouped:
      case Coloring::RandomBalanced: colors[k] = k < static_cast<std::size_t>(n) ? Color::Red : Color::Blue; break;
    }
  }
  if (coloring == Coloring::RandomBalanced) std::shuffle(colors.begin(), colors.end(), rng);
  return colors;
}

Instance generate(const GenSpec& spec) {
  if (spec.n < 1) throw Error(ErrorCode::OddCount, "n must be at least 1");
  std::mt19937_64 rng(spec.seed);
  const int count = 2 * spec.n;
  const auto positions =
      spec.shape == Shape::Circle ? random_circle_points(count, rng) : random_convex_polygon(count, rng);
  const auto colors = make_colors(spec.n, spec.coloring, rng);
  std::vector<ColoredPoint> points;
  points.reserve(positions.size());
  for (std::size_t k = 0; k < positions.size(); ++k) points.push_back({positions[k].x, positions[k].y, colors[k]});
  return Instance::validate(std::move(points));
}

}  // namespace bbm
