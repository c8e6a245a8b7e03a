#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "bbmatch/geometry.hpp"

namespace bbm {

enum class Shape { Circle, Convex };
enum class Coloring { RandomBalanced, Alternating, Grouped };

struct GenSpec {
  int n = 1;  // points of each color
  Shape shape = Shape::Convex;
  Coloring coloring = Coloring::RandomBalanced;
  std::uint64_t seed = 0;
};

Shape parse_shape(std::string_view name);
Coloring parse_coloring(std::string_view name);

/// `count` sorted random angles on the unit circle with consecutive gaps of
/// at least min(1e-6, pi / count), so the result always validates as strictly
/// convex in double precision.
std::vector<Point2> random_circle_points(int count, std::mt19937_64& rng);

/// Random convex polygon from sorted, chain-split and angle-sorted edge
/// vectors, scaled into [-1, 1]^2, counter-clockwise. Redraws on the
/// (measure-zero) collinear outcomes.
std::vector<Point2> random_convex_polygon(int count, std::mt19937_64& rng);

std::vector<Color> make_colors(int n, Coloring coloring, std::mt19937_64& rng);

/// Deterministic in `spec.seed`; the result always passes Instance::validate.
Instance generate(const GenSpec& spec);

}  // namespace bbm
