#pragma once

#include <span>
#include <vector>

#include "bbmatch/geometry.hpp"
#include "bbmatch/matching.hpp"
#include "bbmatch/orbits.hpp"
#include "bbmatch/work_counter.hpp"

namespace bbm {

inline constexpr double kConcyclicTolerance = 1e-6;

/// Split of one orbit-graph component: orbits before `split` contribute their
/// red-blue edges, the rest their blue-red edges.
///
/// red_blue[l] is the longest red-blue edge (squared) among orbits[0..l-1] and
/// blue_red[l] the longest blue-red edge among orbits[l..m-1]; empty ranges
/// hold -infinity. Both arrays have m + 1 entries.
struct ComponentPlan {
  std::vector<int> orbits;
  std::vector<double> red_blue;
  std::vector<double> blue_red;
  int split = 0;
  double value_sq = 0.0;
};

/// `orbits` in Hamiltonian-path order; the per-orbit maxima are indexed by
/// orbit id. Ties go to the smallest split.
ComponentPlan component_plan(std::span<const int> orbits, std::span<const double> max_red_blue_sq,
                             std::span<const double> max_blue_red_sq);

/// True iff every point lies within relative tolerance `rel_tol` of the
/// circle through three spread-out points of the instance.
bool is_concyclic(const Instance& inst, double rel_tol = kConcyclicTolerance);

/// Bottleneck matching for points on a common circle, O(n). Throws
/// NotOnCircle if the instance fails is_concyclic.
MatchingResult solve_circle(const Instance& inst, const OrbitStructure& orb, const OrbitGraph& graph,
                            WorkCounter* counter = nullptr);
MatchingResult solve_circle(const Instance& inst, WorkCounter* counter = nullptr);

}  // namespace bbm
