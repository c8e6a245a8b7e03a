#include "bbmatch/circle_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bbm {

namespace {

constexpr double kNone = -std::numeric_limits<double>::infinity();

}  // namespace

ComponentPlan component_plan(std::span<const int> orbits, std::span<const double> max_red_blue_sq,
                             std::span<const double> max_blue_red_sq) {
  const std::size_t m = orbits.size();
  ComponentPlan plan;
  plan.orbits.assign(orbits.begin(), orbits.end());
  plan.red_blue.assign(m + 1, kNone);
  plan.blue_red.assign(m + 1, kNone);
  for (std::size_t l = 1; l <= m; ++l) {
    plan.red_blue[l] = std::max(plan.red_blue[l - 1], max_red_blue_sq[static_cast<std::size_t>(orbits[l - 1])]);
  }
  for (std::size_t l = m; l-- > 0;) {
    plan.blue_red[l] = std::max(plan.blue_red[l + 1], max_blue_red_sq[static_cast<std::size_t>(orbits[l])]);
  }
  plan.value_sq = std::numeric_limits<double>::infinity();
  for (std::size_t l = 0; l <= m; ++l) {
    const double v = std::max(plan.red_blue[l], plan.blue_red[l]);
    if (v < plan.value_sq) {
      plan.value_sq = v;
      plan.split = static_cast<int>(l);
    }
  }
  return plan;
}

bool is_concyclic(const Instance& inst, double rel_tol) {
  const int n = inst.size();
  if (n <= 3) return true;
  const Point2 a = inst.point(0).position();
  const Point2 b = inst.point(n / 3).position();
  const Point2 c = inst.point((2 * n) / 3).position();
  const double d = 2.0 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
  if (d == 0.0) return false;
  const double a2 = a.x * a.x + a.y * a.y;
  const double b2 = b.x * b.x + b.y * b.y;
  const double c2 = c.x * c.x + c.y * c.y;
  const double ux = (a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d;
  const double uy = (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d;
  const double r = std::hypot(a.x - ux, a.y - uy);
  for (int i = 0; i < n; ++i) {
    const double ri = std::hypot(inst.point(i).x - ux, inst.point(i).y - uy);
    if (std::abs(ri - r) > rel_tol * r) return false;
  }
  return true;
}

MatchingResult solve_circle(const Instance& inst, const OrbitStructure& orb, const OrbitGraph& graph,
                            WorkCounter* counter) {
  if (!is_concyclic(inst)) throw Error(ErrorCode::NotOnCircle, "points do not lie on a common circle");

  const auto orbit_count = static_cast<std::size_t>(orb.orbit_count());
  // Per orbit: 1 = emit red-blue edges, 0 = emit blue-red edges.
  std::vector<char> use_red_blue(orbit_count, 0);
  std::uint64_t steps = 0;
  for (const auto& path : graph.components) {
    const ComponentPlan plan = component_plan(path, graph.max_red_blue_sq, graph.max_blue_red_sq);
    for (int l = 0; l < plan.split; ++l) use_red_blue[static_cast<std::size_t>(path[static_cast<std::size_t>(l)])] = 1;
    steps += 3 * path.size() + 2;
  }

  std::vector<IndexPair> pairs;
  pairs.reserve(static_cast<std::size_t>(inst.pair_count()));
  for (int i = 0; i < inst.size(); ++i) {
    const bool red_blue = use_red_blue[static_cast<std::size_t>(orb.orbit_id[static_cast<std::size_t>(i)])] != 0;
    if (inst.is_red(i) == red_blue) pairs.emplace_back(i, orb.o[static_cast<std::size_t>(i)]);
  }
  steps += static_cast<std::uint64_t>(inst.size());
  count(counter, steps);
  return make_result(inst, std::move(pairs), "circle");
}

MatchingResult solve_circle(const Instance& inst, WorkCounter* counter) {
  if (!is_concyclic(inst)) throw Error(ErrorCode::NotOnCircle, "points do not lie on a common circle");
  const OrbitStructure orb = compute_orbits(inst, counter);
  const OrbitGraph graph = build_orbit_graph(inst, orb, counter);
  return solve_circle(inst, orb, graph, counter);
}

}  // namespace bbm
