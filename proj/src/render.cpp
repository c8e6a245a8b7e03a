#include "bbmatch/render.hpp"

#include <algorithm>
#include <array>
#include <cstdio>

#include "bbmatch/orbits.hpp"

namespace bbm {

namespace {

constexpr std::array<const char*, 8> kOrbitPalette = {"#4e79a7", "#f28e2b", "#59a14f", "#b07aa1",
                                                      "#76b7b2", "#edc948", "#9c755f", "#bab0ac"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

}  // namespace

std::string render_svg(const Instance& inst, const RenderOptions& options) {
  const int n = inst.size();
  double min_x = inst.point(0).x, max_x = min_x, min_y = inst.point(0).y, max_y = min_y;
  for (const auto& p : inst.points()) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double margin = 20.0;
  const double extent = std::max({max_x - min_x, max_y - min_y, 1e-12});
  const double scale = (options.canvas - 2.0 * margin) / extent;
  auto sx = [&](double x) { return num(margin + (x - min_x) * scale); };
  auto sy = [&](double y) { return num(options.canvas - margin - (y - min_y) * scale); };  // y up
  auto coords = [&](int i) { return sx(inst.point(i).x) + "," + sy(inst.point(i).y); };

  const OrbitStructure orb = compute_orbits(inst);

  std::string svg;
  const std::string size = std::to_string(options.canvas);
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + size + "\" height=\"" + size +
         "\" viewBox=\"0 0 " + size + " " + size + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  if (options.show_orbits) {
    svg += "<g id=\"orbits\">\n";
    for (int id = 0; id < orb.orbit_count(); ++id) {
      std::string pts;
      for (const int i : orb.orbits[static_cast<std::size_t>(id)]) pts += (pts.empty() ? "" : " ") + coords(i);
      const char* color = kOrbitPalette[static_cast<std::size_t>(id) % kOrbitPalette.size()];
      svg += "<polygon class=\"orbit\" data-orbit=\"" + std::to_string(id) + "\" points=\"" + pts + "\" fill=\"" +
             color + "\" fill-opacity=\"0.18\" stroke=\"" + color + "\" stroke-opacity=\"0.5\"/>\n";
    }
    svg += "</g>\n";
  }

  std::string outline;
  for (int i = 0; i < n; ++i) outline += (i == 0 ? "" : " ") + coords(i);
  svg += "<polygon id=\"outline\" points=\"" + outline + "\" fill=\"none\" stroke=\"#888\" stroke-width=\"1\"/>\n";

  if (!options.matching.empty()) {
    svg += "<g id=\"matching\" stroke=\"black\" stroke-width=\"2\">\n";
    for (const auto& [a, b] : options.matching) {
      if (a < 0 || a >= n || b < 0 || b >= n || a == b) {
        throw Error(ErrorCode::Parse, "matching pair (" + std::to_string(a) + "," + std::to_string(b) + ") is out of range");
      }
      const bool edge = classify_pair(inst, orb, a, b) == PairKind::Edge;
      svg += "<line class=\"" + std::string(edge ? "edge" : "diagonal") + "\" x1=\"" + sx(inst.point(a).x) +
             "\" y1=\"" + sy(inst.point(a).y) + "\" x2=\"" + sx(inst.point(b).x) + "\" y2=\"" +
             sy(inst.point(b).y) + "\"" + (edge ? " stroke-dasharray=\"6,4\"" : "") + "/>\n";
    }
    svg += "</g>\n";
  }

  svg += "<g id=\"points\">\n";
  for (int i = 0; i < n; ++i) {
    const bool red = inst.is_red(i);
    svg += "<circle class=\"" + std::string(red ? "red" : "blue") + "\" data-index=\"" + std::to_string(i) +
           "\" cx=\"" + sx(inst.point(i).x) + "\" cy=\"" + sy(inst.point(i).y) + "\" r=\"5\" fill=\"" +
           (red ? "#d62728" : "#1f77b4") + "\"/>\n";
  }
  svg += "</g>\n</svg>\n";
  return svg;
}

}  // namespace bbm
