#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "bbmatch/geometry.hpp"

namespace bbm::io {

// Plain-text instance format:
//
//   # comments run to end of line
//   4            <- number of points (2n)
//   1 0 R        <- x y color, counter-clockwise order
//   ...
//
// JSON equivalent: {"points":[{"x":1,"y":0,"c":"R"}, ...]}.
// Coordinates are written in shortest round-trip form, so write -> parse is
// bit-exact.

std::vector<ColoredPoint> parse_points_text(std::string_view text);
std::vector<ColoredPoint> parse_points_json(std::string_view text);
/// Dispatches on the first non-blank character ('{' means JSON).
std::vector<ColoredPoint> parse_points(std::string_view text);

std::string write_text(const std::vector<ColoredPoint>& points);
std::string write_json(const std::vector<ColoredPoint>& points);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

/// Reads and validates an instance file in either format.
Instance load_instance(const std::filesystem::path& path);

/// Reads the "pairs" array of a matching document ({"pairs":[[i,j],...]}).
std::vector<IndexPair> parse_matching_json(std::string_view text);

}  // namespace bbm::io
