#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "bbmatch/geometry.hpp"
#include "bbmatch/matching.hpp"
#include "bbmatch/orbits.hpp"
#include "bbmatch/work_counter.hpp"

namespace bbm {

/// How `necessary(i, j)` is decided.
///
/// Operational: every orbit edge is necessary; any other feasible pair is
/// necessary iff matching i with j is strictly better than every other case of
/// the S1 recurrence. Definitional: a pair is necessary iff every minimizing
/// case of the recurrence contains it, which leaves out edges that an equally
/// good matching can avoid. Both rules agree on diagonals.
enum class NecessaryRule { Operational, Definitional };

enum class Table : std::uint8_t { S0, S1 };

/// Tables over cyclic intervals <i..j>. A state is filled iff the interval is
/// balanced; all others read as +infinity / kUnfilled.
///
/// S0(i, j) is the best bottleneck (squared) over matchings of <i..j> that use
/// orbit edges only. S1(i, j) is the best over matchings with at most one
/// cascade in which the segment (i, j) borders at most one other diagonal.
class DpTables {
 public:
  static constexpr std::uint8_t kUnfilled = 0xFF;

  // S0 choices.
  static constexpr std::uint8_t kMatchForward = 0;   // (i, o(i))
  static constexpr std::uint8_t kMatchBackward = 1;  // (o^-1(i), i)
  // S1 choices, in the order the recurrence lists them.
  static constexpr std::uint8_t kFirstEdgeOuterS1 = 0;  // (i, o(i)), S0 inside, S1 after
  static constexpr std::uint8_t kFirstEdgeInnerS1 = 1;  // (i, o(i)), S1 inside, S0 after
  static constexpr std::uint8_t kLastEdgeOuterS1 = 2;   // (o^-1(j), j), S0 inside, S1 before
  static constexpr std::uint8_t kLastEdgeInnerS1 = 3;   // (o^-1(j), j), S1 inside, S0 before
  static constexpr std::uint8_t kMatchEnds = 4;         // (i, j), S1 inside

  DpTables() = default;

  int size() const noexcept { return size_; }
  bool filled(int i, int j) const noexcept { return has_slot(i, j) && choice1_[at(i, j)] != kUnfilled; }
  double s0(int i, int j) const noexcept { return has_slot(i, j) ? s0_[at(i, j)] : kNoValue; }
  double s1(int i, int j) const noexcept { return has_slot(i, j) ? s1_[at(i, j)] : kNoValue; }
  double value(Table t, int i, int j) const noexcept { return t == Table::S0 ? s0(i, j) : s1(i, j); }
  bool necessary(int i, int j) const noexcept { return has_slot(i, j) && necessary_[at(i, j)] != 0; }
  std::uint8_t choice0(int i, int j) const noexcept { return has_slot(i, j) ? choice0_[at(i, j)] : kUnfilled; }
  std::uint8_t choice1(int i, int j) const noexcept { return has_slot(i, j) ? choice1_[at(i, j)] : kUnfilled; }
  std::size_t state_count() const noexcept { return states_; }
  NecessaryRule rule() const noexcept { return rule_; }

 private:
  friend DpTables compute_dp(const Instance&, const OrbitStructure&, NecessaryRule, WorkCounter*);

  static constexpr double kNoValue = std::numeric_limits<double>::infinity();

  int offset(int i, int j) const noexcept {
    const int d = j - i;
    return d < 0 ? d + size_ : d;
  }
  // Only even-length intervals can be balanced, so only odd offsets get a
  // slot. Rows are keyed by length, which keeps each sweep of the fill loop
  // sequential in memory.
  bool has_slot(int i, int j) const noexcept { return offset(i, j) % 2 == 1; }
  std::size_t at(int i, int j) const noexcept {
    return static_cast<std::size_t>(offset(i, j) / 2) * static_cast<std::size_t>(size_) + static_cast<std::size_t>(i);
  }

  int size_ = 0;
  std::size_t states_ = 0;
  NecessaryRule rule_ = NecessaryRule::Operational;
  std::vector<double> s0_;
  std::vector<double> s1_;
  std::vector<std::uint8_t> choice0_;
  std::vector<std::uint8_t> choice1_;
  std::vector<std::uint8_t> necessary_;
};

/// Fills S0, S1 and necessary for every balanced interval, shortest first.
/// O(n^2) time and space.
DpTables compute_dp(const Instance& inst, const OrbitStructure& orb,
                    NecessaryRule rule = NecessaryRule::Operational, WorkCounter* counter = nullptr);

/// Oriented pair (i, j) naming the interval <i..j>.
struct OrientedPair {
  int i = 0;
  int j = 0;
  friend bool operator==(const OrientedPair&, const OrientedPair&) = default;
};

inline constexpr double kCandidateAngleTolerance = 1e-9;

/// Oriented feasible pairs that are necessary and turn by at most 2*pi/3
/// (inclusive, with kCandidateAngleTolerance slack).
std::vector<OrientedPair> enumerate_candidates(const Instance& inst, const OrbitStructure& orb, const DpTables& dp);

struct DpState {
  Table table = Table::S1;
  int i = 0;
  int j = 0;
};

/// Unfolds the choice codes of `state` into the matching that achieves its
/// stored value. Linear in the interval length.
std::vector<IndexPair> reconstruct(const Instance& inst, const OrbitStructure& orb, const DpTables& dp,
                                   DpState state);

/// Matches the balanced interval <i..j> with orbit edges only: (i, o(i)), then
/// the two sides recursively.
std::vector<IndexPair> edge_only_matching(const Instance& inst, const OrbitStructure& orb, int i, int j);

struct ConvexSearchOptions {
  // When false, the three-cascade search tries every feasible oriented pair as
  // the fixed inner pair instead of only the candidates. O(n^3); for tests.
  bool candidates_only = true;
};

/// Where the best value was found: a single S1 state over the whole set, or
/// three S1 states <i..j>, <j+1..k>, <k+1..i-1>.
struct ConvexSearch {
  double value_sq = 0.0;
  double one_cascade_sq = 0.0;
  double three_cascade_sq = 0.0;  // +inf when no split was tried
  bool three_cascades = false;
  int i = 0;
  int j = 0;
  int k = 0;
  std::size_t candidate_count = 0;
};

ConvexSearch search_convex(const Instance& inst, const OrbitStructure& orb, const DpTables& dp,
                           ConvexSearchOptions options = {}, WorkCounter* counter = nullptr);

/// Bottleneck matching for points in convex position, O(n^2).
MatchingResult solve_convex(const Instance& inst, const OrbitStructure& orb, const DpTables& dp,
                            ConvexSearchOptions options = {}, WorkCounter* counter = nullptr);
MatchingResult solve_convex(const Instance& inst, WorkCounter* counter = nullptr);

/// Uncolored variant: colors the points alternately and runs solve_convex,
/// since then every pair with an even number of points between them is
/// feasible. Throws like Instance::validate on bad geometry.
MatchingResult solve_monochromatic(std::span<const Point2> points);

}  // namespace bbm
