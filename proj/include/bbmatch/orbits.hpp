#pragma once

#include <vector>

#include "bbmatch/geometry.hpp"
#include "bbmatch/work_counter.hpp"

namespace bbm {

inline constexpr int kNoOrbit = -1;

/// The successor function o, its inverse, and the partition of points into
/// orbits {o^k(i)}.
///
/// o(i) is the first point after i (going counter-clockwise) such that (i, o(i))
/// can appear in a non-crossing bichromatic perfect matching. Orbit ids follow
/// the smallest member index; each member list starts at that index and
/// follows o, which visits the orbit in counter-clockwise order.
struct OrbitStructure {
  std::vector<int> o;
  std::vector<int> o_inv;
  std::vector<int> orbit_id;
  std::vector<std::vector<int>> orbits;

  int orbit_count() const noexcept { return static_cast<int>(orbits.size()); }
};

/// Two stack sweeps, O(n).
OrbitStructure compute_orbits(const Instance& inst, WorkCounter* counter = nullptr);

/// (i, j) appears in some matching iff the colors differ and both lie on the
/// same orbit.
bool is_feasible(const Instance& inst, const OrbitStructure& orb, int i, int j) noexcept;

enum class PairKind { Edge, Diagonal, Infeasible };

PairKind classify_pair(const Instance& inst, const OrbitStructure& orb, int i, int j) noexcept;

enum class EdgeKind { RedBlue, BlueRed };

/// Directed orbit edge (from, o(from)); the kind follows the color of `from`.
struct OrbitEdge {
  int from = 0;
  int to = 0;
  EdgeKind kind = EdgeKind::RedBlue;
};

/// All directed edges of one orbit, in member order. A two-point orbit yields
/// both (i, j) and (j, i), one of each kind.
std::vector<OrbitEdge> orbit_edges(const Instance& inst, const OrbitStructure& orb, int orbit);

/// Total order on orbits plus the orbit graph (arcs between crossing orbits,
/// oriented along the order), stored as successor links. Every weakly
/// connected component of the graph has a unique Hamiltonian path, listed in
/// `components`.
struct OrbitGraph {
  std::vector<int> succ;    // successor in the total order, or kNoOrbit
  std::vector<int> succ_g;  // successor on the component's Hamiltonian path
  std::vector<int> order;   // all orbits, smallest first
  std::vector<std::vector<int>> components;
  std::vector<int> component_of;
  std::vector<double> max_red_blue_sq;  // longest red-blue edge per orbit
  std::vector<double> max_blue_red_sq;
};

/// One scan over consecutive point pairs, O(n).
OrbitGraph build_orbit_graph(const Instance& inst, const OrbitStructure& orb, WorkCounter* counter = nullptr);

}  // namespace bbm
