#pragma once

#include <cstdint>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "bbmatch/fixtures.hpp"
#include "bbmatch/generate.hpp"

namespace bbm::testing {

/// Random instance with `size` points; shape and coloring are drawn from the
/// seed too, so a seed sweep covers circles, polygons and all colorings.
inline Instance random_instance(int size, std::uint64_t seed) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(size));
  GenSpec spec;
  spec.n = size / 2;
  spec.shape = rng() % 2 == 0 ? Shape::Circle : Shape::Convex;
  const auto pick = rng() % 8;
  spec.coloring = pick == 0 ? Coloring::Alternating : pick == 1 ? Coloring::Grouped : Coloring::RandomBalanced;
  spec.seed = rng();
  return generate(spec);
}

inline Instance random_instance(int size, std::uint64_t seed, Shape shape, Coloring coloring) {
  return generate(GenSpec{size / 2, shape, coloring, seed});
}

/// Random member of the three-cap family: shape parameters drawn around the
/// fixture, indices rotated and colors optionally swapped. Most draws need a
/// three-cascade matching to reach the optimum.
inline Instance random_three_caps(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  fixtures::CapShape shape;
  shape.lead_angle_deg = 5.0 + 20.0 * u(rng);
  shape.trail_angle_deg = 80.0 + (115.0 - shape.lead_angle_deg - 80.0) * u(rng);
  const double deg = std::numbers::pi / 180.0;
  const double apex = std::numbers::pi - (shape.lead_angle_deg + shape.trail_angle_deg) * deg;
  const double short_side = std::sin(shape.lead_angle_deg * deg) / std::sin(apex);
  shape.cut = short_side * (0.05 + 0.5 * u(rng));
  shape.junction = 1.2 + 2.0 * u(rng);
  auto points = fixtures::three_caps(shape).points();
  std::rotate(points.begin(), points.begin() + static_cast<long>(rng() % points.size()), points.end());
  if (rng() % 2 == 0) {
    for (auto& p : points) p.color = opposite(p.color);
  }
  return Instance::validate(std::move(points));
}

}  // namespace bbm::testing
