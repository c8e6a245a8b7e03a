#include "bbmatch/orbits.hpp"

#include <algorithm>
#include <limits>

namespace bbm {

namespace {

// Assigns o(i) for every point of color `pushed`. The sweep starts where every
// prefix has at least as many `pushed` points as the other color, so the
// stack never underflows.
void stack_sweep(const Instance& inst, Color pushed, std::vector<int>& o, std::vector<int>& stack) {
  const auto& z = inst.prefix_balance();
  const int n = inst.size();
  int start = 0;
  for (int i = 1; i < n; ++i) {
    const bool better = pushed == Color::Red ? z[static_cast<std::size_t>(i)] < z[static_cast<std::size_t>(start)]
                                             : z[static_cast<std::size_t>(i)] > z[static_cast<std::size_t>(start)];
    if (better) start = i;
  }
  stack.clear();
  for (int step = 0, i = start; step < n; ++step, i = inst.next(i)) {
    if (inst.color(i) == pushed) {
      stack.push_back(i);
    } else {
      o[static_cast<std::size_t>(stack.back())] = i;
      stack.pop_back();
    }
  }
}

}  // namespace

OrbitStructure compute_orbits(const Instance& inst, WorkCounter* counter) {
  const int n = inst.size();
  OrbitStructure orb;
  orb.o.assign(static_cast<std::size_t>(n), -1);
  orb.o_inv.assign(static_cast<std::size_t>(n), -1);
  orb.orbit_id.assign(static_cast<std::size_t>(n), kNoOrbit);

  std::vector<int> stack;
  stack.reserve(static_cast<std::size_t>(n));
  stack_sweep(inst, Color::Red, orb.o, stack);
  stack_sweep(inst, Color::Blue, orb.o, stack);

  for (int i = 0; i < n; ++i) orb.o_inv[static_cast<std::size_t>(orb.o[static_cast<std::size_t>(i)])] = i;

  for (int i = 0; i < n; ++i) {
    if (orb.orbit_id[static_cast<std::size_t>(i)] != kNoOrbit) continue;
    const int id = orb.orbit_count();
    auto& members = orb.orbits.emplace_back();
    int j = i;
    do {
      orb.orbit_id[static_cast<std::size_t>(j)] = id;
      members.push_back(j);
      j = orb.o[static_cast<std::size_t>(j)];
    } while (j != i);
  }
  // Six linear passes: two argmin scans, two sweeps, inversion, tracing.
  count(counter, 6 * static_cast<std::uint64_t>(n));
  return orb;
}

bool is_feasible(const Instance& inst, const OrbitStructure& orb, int i, int j) noexcept {
  return i != j && inst.color(i) != inst.color(j) &&
         orb.orbit_id[static_cast<std::size_t>(i)] == orb.orbit_id[static_cast<std::size_t>(j)];
}

PairKind classify_pair(const Instance& inst, const OrbitStructure& orb, int i, int j) noexcept {
  if (!is_feasible(inst, orb, i, j)) return PairKind::Infeasible;
  if (orb.o[static_cast<std::size_t>(i)] == j || orb.o[static_cast<std::size_t>(j)] == i) return PairKind::Edge;
  return PairKind::Diagonal;
}

std::vector<OrbitEdge> orbit_edges(const Instance& inst, const OrbitStructure& orb, int orbit) {
  std::vector<OrbitEdge> edges;
  for (const int i : orb.orbits[static_cast<std::size_t>(orbit)]) {
    edges.push_back({i, orb.o[static_cast<std::size_t>(i)], inst.is_red(i) ? EdgeKind::RedBlue : EdgeKind::BlueRed});
  }
  return edges;
}

OrbitGraph build_orbit_graph(const Instance& inst, const OrbitStructure& orb, WorkCounter* counter) {
  const int n = inst.size();
  const auto m = static_cast<std::size_t>(orb.orbit_count());
  OrbitGraph g;
  g.succ.assign(m, kNoOrbit);
  g.succ_g.assign(m, kNoOrbit);
  g.component_of.assign(m, -1);
  g.max_red_blue_sq.assign(m, -std::numeric_limits<double>::infinity());
  g.max_blue_red_sq.assign(m, -std::numeric_limits<double>::infinity());

  std::vector<char> has_pred(m, 0);
  std::vector<char> has_pred_g(m, 0);

  for (int i = 0; i < n; ++i) {
    const auto id = static_cast<std::size_t>(orb.orbit_id[static_cast<std::size_t>(i)]);
    const double len = inst.dist_sq(i, orb.o[static_cast<std::size_t>(i)]);
    auto& best = inst.is_red(i) ? g.max_red_blue_sq[id] : g.max_blue_red_sq[id];
    best = std::max(best, len);

    // Same-colored neighbors sit on orbits that are consecutive in the order.
    const int j = inst.next(i);
    if (inst.color(i) != inst.color(j)) continue;
    const int a = orb.orbit_id[static_cast<std::size_t>(i)];
    const int b = orb.orbit_id[static_cast<std::size_t>(j)];
    const bool crossing = chords_cross({i, orb.o[static_cast<std::size_t>(i)]}, {orb.o_inv[static_cast<std::size_t>(j)], j});
    const int lower = inst.is_red(i) ? b : a;
    const int upper = inst.is_red(i) ? a : b;
    g.succ[static_cast<std::size_t>(lower)] = upper;
    has_pred[static_cast<std::size_t>(upper)] = 1;
    if (crossing) {
      g.succ_g[static_cast<std::size_t>(lower)] = upper;
      has_pred_g[static_cast<std::size_t>(upper)] = 1;
    }
  }

  int first = 0;
  while (static_cast<std::size_t>(first) < m && has_pred[static_cast<std::size_t>(first)]) ++first;
  for (int a = first; a != kNoOrbit; a = g.succ[static_cast<std::size_t>(a)]) g.order.push_back(a);

  for (const int start : g.order) {
    if (has_pred_g[static_cast<std::size_t>(start)]) continue;
    const int component = static_cast<int>(g.components.size());
    auto& path = g.components.emplace_back();
    for (int a = start; a != kNoOrbit; a = g.succ_g[static_cast<std::size_t>(a)]) {
      path.push_back(a);
      g.component_of[static_cast<std::size_t>(a)] = component;
    }
  }
  count(counter, 2 * static_cast<std::uint64_t>(n) + 3 * m);
  return g;
}

}  // namespace bbm
