#include "bbmatch/fixtures.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace bbm::fixtures {

Instance sq4() {
  return Instance::validate({{1, 0, Color::Red}, {0, 1, Color::Blue}, {-1, 0, Color::Red}, {0, -1, Color::Blue}});
}

Instance rrbb4() {
  return Instance::validate({{1, 0, Color::Red}, {0, 1, Color::Red}, {-1, 0, Color::Blue}, {0, -1, Color::Blue}});
}

Instance hex6() { return regular_polygon("RBBRRB"); }

Instance oct8() { return regular_polygon("RBBRRBBR"); }

Instance regular_polygon(std::string_view colors) {
  const auto n = colors.size();
  std::vector<ColoredPoint> points;
  points.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    if (colors[k] != 'R' && colors[k] != 'B') {
      throw Error(ErrorCode::Parse, std::string("bad color character '") + colors[k] + "'");
    }
    points.push_back({std::cos(angle), std::sin(angle), colors[k] == 'R' ? Color::Red : Color::Blue});
  }
  return Instance::validate(std::move(points));
}

Instance alternating(int size) {
  std::string colors;
  for (int k = 0; k < size; ++k) colors.push_back(k % 2 == 0 ? 'R' : 'B');
  return regular_polygon(colors);
}

Instance three_caps(const CapShape& shape) {
  const double deg = std::numbers::pi / 180.0;
  const double lead = shape.lead_angle_deg * deg;
  const double trail = shape.trail_angle_deg * deg;
  const double apex = std::numbers::pi - lead - trail;
  // Cap triangle on a unit base: law of sines gives the two sides.
  const double lead_side = std::sin(trail) / std::sin(apex);
  const double trail_side = std::sin(lead) / std::sin(apex);
  // Whatever turning the caps leave over is split evenly between the two
  // corners at each junction.
  const double junction_dir = trail + (2.0 * std::numbers::pi / 3.0 - trail - lead) / 2.0;

  std::vector<ColoredPoint> points;
  double x = 0.0, y = 0.0;
  auto step = [&](double dir, double len) {
    x += len * std::cos(dir);
    y += len * std::sin(dir);
  };
  for (int k = 0; k < 3; ++k) {
    const double base = 2.0 * std::numbers::pi * k / 3.0;
    points.push_back({x, y, Color::Red});
    step(base - lead, lead_side - shape.cut);
    points.push_back({x, y, Color::Blue});
    step(base - lead, shape.cut);
    step(base + trail, shape.cut);
    points.push_back({x, y, Color::Red});
    step(base + trail, trail_side - shape.cut);
    points.push_back({x, y, Color::Blue});
    step(base + junction_dir, shape.junction);
  }
  return Instance::validate(std::move(points));
}

Instance by_name(std::string_view name) {
  if (name == "SQ4") return sq4();
  if (name == "RRBB4") return rrbb4();
  if (name == "HEX6") return hex6();
  if (name == "OCT8") return oct8();
  if (name == "CAPS12") return three_caps();
  throw Error(ErrorCode::Parse, "unknown fixture '" + std::string(name) + "'");
}

}  // namespace bbm::fixtures
