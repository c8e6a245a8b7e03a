#pragma once

#include <span>
#include <string>

#include "bbmatch/geometry.hpp"

namespace bbm {

struct RenderOptions {
  std::span<const IndexPair> matching;  // may be empty
  bool show_orbits = false;
  int canvas = 800;  // pixels, square
};

/// SVG drawing of the polygon outline, the colored points, the matching
/// (diagonals solid, orbit edges dashed) and, optionally, one shaded polygon per
/// orbit. Output is byte-identical for identical input.
std::string render_svg(const Instance& inst, const RenderOptions& options = {});

}  // namespace bbm
