#pragma once

#include <string_view>

#include "bbmatch/geometry.hpp"

namespace bbm::fixtures {

// Hand-checkable instances shared by tests, docs and the CLI (`--fixture`).

/// (1,0)R (0,1)B (-1,0)R (0,-1)B
Instance sq4();
/// (1,0)R (0,1)R (-1,0)B (0,-1)B
Instance rrbb4();
/// Regular hexagon, unit circumradius, colors R B B R R B.
Instance hex6();
/// Regular octagon, unit circumradius, colors R B B R R B B R.
Instance oct8();

/// Regular polygon with unit circumradius, vertex k at angle 2*pi*k/size,
/// colored by `colors` ('R'/'B').
Instance regular_polygon(std::string_view colors);

/// Regular polygon with alternating colors starting with red.
Instance alternating(int size);

/// Three caps R B R B around a hexagonal middle, each cap a unit-base triangle
/// with base angles `lead` and `trail` (degrees) whose apex is cut at distance
/// `cut`; consecutive caps are `junction` apart and rotated by 120 degrees.
/// With lead + trail < 120 and a long enough junction, every bottleneck
/// matching pairs the base of each cap, which closes a region bounded by three
/// diagonals.
struct CapShape {
  double lead_angle_deg = 15.0;
  double trail_angle_deg = 100.0;
  double cut = 0.05;
  double junction = 2.0;
};
Instance three_caps(const CapShape& shape = {});

/// Looks up a fixture by name (SQ4, RRBB4, HEX6, OCT8, CAPS12); throws Parse
/// otherwise.
Instance by_name(std::string_view name);

}  // namespace bbm::fixtures
