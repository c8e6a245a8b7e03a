#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "bbmatch/convex_solver.hpp"
#include "bbmatch/geometry.hpp"
#include "bbmatch/matching.hpp"
#include "bbmatch/orbits.hpp"

// Reference machinery for checking the solvers. Nothing here uses orbits or the
// cascade tables except polarity_check, which inspects them.
namespace bbm::oracle {

inline constexpr int kEnumerationLimit = 16;

/// Exact O(n^3) interval DP: point a of [a..b] is matched to some k with a
/// different color and a balanced [a..k]; both sides are solved recursively.
MatchingResult oracle_dp(const Instance& inst);

using MatchingVisitor = std::function<void(std::span<const IndexPair>)>;

/// Calls `visit` once per non-crossing bichromatic perfect matching, branching
/// on the partner of the first unmatched point. Throws TooLarge above
/// kEnumerationLimit points.
std::size_t enumerate_all_matchings(const Instance& inst, const MatchingVisitor& visit);

struct BruteForce {
  double value_sq = 0.0;
  std::vector<IndexPair> pairs;
  std::size_t matchings = 0;
};

/// Minimum over enumerate_all_matchings.
BruteForce bichromatic_bruteforce(const Instance& inst);

/// Minimum over all non-crossing perfect matchings of an uncolored convex
/// point cycle, any two points allowed. Throws TooLarge above
/// kEnumerationLimit points and like check_convex_position on bad input.
BruteForce monochromatic_bruteforce(std::span<const Point2> points);

struct VerifyReport {
  bool ok = false;
  std::string violation;  // first problem found; empty when ok
  double value_sq = 0.0;
};

/// Checks perfectness, one red and one blue endpoint per pair, and that no two
/// chords cross; recomputes the bottleneck value.
VerifyReport verify_matching(const Instance& inst, std::span<const IndexPair> pairs);

/// Some (not necessarily optimal) matching of the balanced interval <i..j>:
/// sweep from the first point until the opposite-color surplus first reaches
/// one, match there, and recurse on both sides.
std::vector<IndexPair> any_matching(const Instance& inst, int i, int j);

/// The lens construction over a directed chord v_i -> v_j. `arc` is the circle
/// on the right of the chord from which the chord subtends pi/3; `apex` closes
/// the equilateral triangle. The minus region is the part of the arc's disk
/// (right of the chord) at distance >= |v_i v_j| from v_j, the plus region the
/// part at distance >= |v_i v_j| from v_i.
struct PolarityFrame {
  Point2 from;
  Point2 to;
  Point2 center;
  Point2 apex;
  double chord = 0.0;
  double radius = 0.0;

  static PolarityFrame make(Point2 from, Point2 to);

  bool in_arc_region(Point2 x, double tol) const;
  bool in_minus(Point2 x, double tol) const;
  bool in_plus(Point2 x, double tol) const;
};

inline constexpr double kPolarityTolerance = 1e-9;

enum class Polarity { Negative, Positive, Violation };

std::string_view to_string(Polarity p);

/// Locates the orbit members strictly inside <i..j> for a candidate diagonal
/// (i, j). Negative when all fit the minus region (checked first), Positive
/// when all fit the plus region, Violation otherwise. Throws NotADiagonal when
/// (i, j) is not a candidate diagonal under `dp`.
Polarity polarity_check(const Instance& inst, const OrbitStructure& orb, const DpTables& dp, int i, int j);

}  // namespace bbm::oracle
