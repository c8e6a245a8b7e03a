#include "bbmatch/convex_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace bbm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

DpTables compute_dp(const Instance& inst, const OrbitStructure& orb, NecessaryRule rule, WorkCounter* counter) {
  const int n = inst.size();
  const auto cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n / 2);
  DpTables dp;
  dp.size_ = n;
  dp.rule_ = rule;
  dp.s0_.assign(cells, kInf);
  dp.s1_.assign(cells, kInf);
  dp.choice0_.assign(cells, DpTables::kUnfilled);
  dp.choice1_.assign(cells, DpTables::kUnfilled);
  dp.necessary_.assign(cells, 0);

  const auto& o = orb.o;
  const auto& o_inv = orb.o_inv;
  auto s0 = [&](int a, int b) { return dp.s0_[dp.at(a, b)]; };
  auto s1 = [&](int a, int b) { return dp.s1_[dp.at(a, b)]; };

  std::uint64_t examined = 0;
  for (int len = 2; len <= n; len += 2) {
    for (int i = 0; i < n; ++i) {
      ++examined;
      const int j = inst.wrap(i + len - 1);
      if (!inst.is_balanced(i, j)) continue;
      const std::size_t cell = dp.at(i, j);
      const int after_i = inst.next(i);
      const int before_j = inst.prev(j);

      // Point i takes o(i), which always lies in <i+1..j>.
      const int p = o[static_cast<std::size_t>(i)];
      const double dp_sq = inst.dist_sq(i, p);
      const bool p_inner = p != after_i;
      const bool p_outer = p != j;

      double best0 = std::max({dp_sq, p_inner ? s0(after_i, inst.prev(p)) : 0.0,
                               p_outer ? s0(inst.next(p), j) : 0.0});
      std::uint8_t choice0 = DpTables::kMatchForward;
      // ... or o^-1(i), when it falls inside the interval.
      const int q = o_inv[static_cast<std::size_t>(i)];
      if (inst.in_interval(i, j, q)) {
        const double v = std::max({inst.dist_sq(i, q), q != after_i ? s0(after_i, inst.prev(q)) : 0.0,
                                   q != j ? s0(inst.next(q), j) : 0.0});
        if (v < best0) {
          best0 = v;
          choice0 = DpTables::kMatchBackward;
        }
      }
      dp.s0_[cell] = best0;
      dp.choice0_[cell] = choice0;

      // Squared distances are >= 0, so 0.0 stands in for an omitted term.
      double cases[5];
      cases[DpTables::kFirstEdgeOuterS1] =
          std::max({dp_sq, p_inner ? s0(after_i, inst.prev(p)) : 0.0, p_outer ? s1(inst.next(p), j) : 0.0});
      cases[DpTables::kFirstEdgeInnerS1] =
          std::max({dp_sq, p_inner ? s1(after_i, inst.prev(p)) : 0.0, p_outer ? s0(inst.next(p), j) : 0.0});

      const int l = o_inv[static_cast<std::size_t>(j)];
      const double dl_sq = inst.dist_sq(l, j);
      const bool l_inner = l != before_j;
      const bool l_outer = l != i;
      cases[DpTables::kLastEdgeOuterS1] =
          std::max({dl_sq, l_inner ? s0(inst.next(l), before_j) : 0.0, l_outer ? s1(i, inst.prev(l)) : 0.0});
      cases[DpTables::kLastEdgeInnerS1] =
          std::max({dl_sq, l_inner ? s1(inst.next(l), before_j) : 0.0, l_outer ? s0(i, inst.prev(l)) : 0.0});

      // Balanced interval, so differing end colors make (i, j) feasible.
      const bool ends_feasible = inst.color(i) != inst.color(j);
      cases[DpTables::kMatchEnds] =
          ends_feasible ? std::max(inst.dist_sq(i, j), len > 2 ? s1(after_i, before_j) : 0.0) : kInf;

      std::uint8_t choice1 = 0;
      for (std::uint8_t c = 1; c < 5; ++c) {
        if (cases[c] < cases[choice1]) choice1 = c;
      }
      dp.s1_[cell] = cases[choice1];
      dp.choice1_[cell] = choice1;

      if (ends_feasible) {
        const double others = std::min({cases[0], cases[1], cases[2], cases[3]});
        bool necessary = false;
        if (rule == NecessaryRule::Operational) {
          const bool edge = p == j || o[static_cast<std::size_t>(j)] == i;
          necessary = edge || cases[DpTables::kMatchEnds] < others;
        } else {
          // Cases 0/1 contain (i, j) iff o(i) == j, cases 2/3 iff o^-1(j) == i.
          double avoiding = kInf;
          if (p != j) avoiding = std::min({avoiding, cases[0], cases[1]});
          if (l != i) avoiding = std::min({avoiding, cases[2], cases[3]});
          necessary = avoiding > dp.s1_[cell];
        }
        dp.necessary_[cell] = necessary ? 1 : 0;
      }
      ++dp.states_;
    }
  }
  count(counter, examined + dp.states_);
  return dp;
}

std::vector<OrientedPair> enumerate_candidates(const Instance& inst, const OrbitStructure& orb, const DpTables& dp) {
  constexpr double kLimit = 2.0 * std::numbers::pi / 3.0 + kCandidateAngleTolerance;
  std::vector<OrientedPair> out;
  const int n = inst.size();
  for (int i = 0; i < n; ++i) {
    for (int len = 2; len <= n; len += 2) {
      const int j = inst.wrap(i + len - 1);
      if (!dp.filled(i, j) || !dp.necessary(i, j)) continue;
      if (!is_feasible(inst, orb, i, j)) continue;
      if (inst.turning_angle(i, j) <= kLimit) out.push_back({i, j});
    }
  }
  return out;
}

std::vector<IndexPair> reconstruct(const Instance& inst, const OrbitStructure& orb, const DpTables& dp,
                                   DpState state) {
  std::vector<IndexPair> pairs;
  std::vector<DpState> pending{state};
  auto push = [&](Table t, int a, int b) { pending.push_back({t, a, b}); };

  while (!pending.empty()) {
    const DpState s = pending.back();
    pending.pop_back();
    const int i = s.i;
    const int j = s.j;
    if (s.table == Table::S0) {
      const int partner = dp.choice0(i, j) == DpTables::kMatchForward ? orb.o[static_cast<std::size_t>(i)]
                                                                      : orb.o_inv[static_cast<std::size_t>(i)];
      pairs.emplace_back(i, partner);
      if (partner != inst.next(i)) push(Table::S0, inst.next(i), inst.prev(partner));
      if (partner != j) push(Table::S0, inst.next(partner), j);
      continue;
    }
    switch (dp.choice1(i, j)) {
      case DpTables::kFirstEdgeOuterS1:
      case DpTables::kFirstEdgeInnerS1: {
        const bool inner_s1 = dp.choice1(i, j) == DpTables::kFirstEdgeInnerS1;
        const int p = orb.o[static_cast<std::size_t>(i)];
        pairs.emplace_back(i, p);
        if (p != inst.next(i)) push(inner_s1 ? Table::S1 : Table::S0, inst.next(i), inst.prev(p));
        if (p != j) push(inner_s1 ? Table::S0 : Table::S1, inst.next(p), j);
        break;
      }
      case DpTables::kLastEdgeOuterS1:
      case DpTables::kLastEdgeInnerS1: {
        const bool inner_s1 = dp.choice1(i, j) == DpTables::kLastEdgeInnerS1;
        const int l = orb.o_inv[static_cast<std::size_t>(j)];
        pairs.emplace_back(l, j);
        if (l != inst.prev(j)) push(inner_s1 ? Table::S1 : Table::S0, inst.next(l), inst.prev(j));
        if (l != i) push(inner_s1 ? Table::S0 : Table::S1, i, inst.prev(l));
        break;
      }
      case DpTables::kMatchEnds:
        pairs.emplace_back(i, j);
        if (inst.interval_length(i, j) > 2) push(Table::S1, inst.next(i), inst.prev(j));
        break;
      default:
        throw Error(ErrorCode::Internal, "reconstruct: unfilled state (" + std::to_string(i) + "," +
                                                 std::to_string(j) + ")");
    }
  }
  return pairs;
}

std::vector<IndexPair> edge_only_matching(const Instance& inst, const OrbitStructure& orb, int i, int j) {
  std::vector<IndexPair> pairs;
  std::vector<std::pair<int, int>> pending{{i, j}};
  while (!pending.empty()) {
    const auto [a, b] = pending.back();
    pending.pop_back();
    const int p = orb.o[static_cast<std::size_t>(a)];
    pairs.emplace_back(a, p);
    if (p != inst.next(a)) pending.emplace_back(inst.next(a), inst.prev(p));
    if (p != b) pending.emplace_back(inst.next(p), b);
  }
  return pairs;
}

ConvexSearch search_convex(const Instance& inst, const OrbitStructure& orb, const DpTables& dp,
                           ConvexSearchOptions options, WorkCounter* counter) {
  const int n = inst.size();
  ConvexSearch best;
  best.value_sq = kInf;
  best.three_cascade_sq = kInf;

  // At most one cascade: some adjacent feasible pair (k, k+1) borders at most
  // one diagonal, so the whole set is an S1 state <k+1..k>.
  for (int k = 0; k < n; ++k) {
    const int start = inst.next(k);
    if (inst.color(k) == inst.color(start)) continue;
    if (dp.s1(start, k) < best.value_sq) {
      best.value_sq = dp.s1(start, k);
      best.i = start;
      best.j = k;
    }
  }
  best.one_cascade_sq = best.value_sq;

  std::vector<OrientedPair> fixed;
  if (options.candidates_only) {
    fixed = enumerate_candidates(inst, orb, dp);
  } else {
    for (int i = 0; i < n; ++i) {
      for (int len = 2; len <= n; len += 2) {
        const int j = inst.wrap(i + len - 1);
        if (is_feasible(inst, orb, i, j)) fixed.push_back({i, j});
      }
    }
  }
  best.candidate_count = fixed.size();

  std::uint64_t tried = 0;
  for (const auto [i, j] : fixed) {
    const int first = inst.next(j);
    const int last = inst.prev(i);
    if (first == i) continue;  // <i..j> is everything; no room for two more parts.
    const double head = dp.s1(i, j);
    for (int k = first; k != last; k = inst.next(k)) {
      ++tried;
      if (!is_feasible(inst, orb, first, k)) continue;
      const double v = std::max({head, dp.s1(first, k), dp.s1(inst.next(k), last)});
      best.three_cascade_sq = std::min(best.three_cascade_sq, v);
      if (v < best.value_sq) {
        best.value_sq = v;
        best.three_cascades = true;
        best.i = i;
        best.j = j;
        best.k = k;
      }
    }
  }
  count(counter, tried + static_cast<std::uint64_t>(n));
  return best;
}

MatchingResult solve_convex(const Instance& inst, const OrbitStructure& orb, const DpTables& dp,
                            ConvexSearchOptions options, WorkCounter* counter) {
  const ConvexSearch best = search_convex(inst, orb, dp, options, counter);
  std::vector<IndexPair> pairs;
  if (!best.three_cascades) {
    pairs = reconstruct(inst, orb, dp, {Table::S1, best.i, best.j});
  } else {
    const int first = inst.next(best.j);
    for (const DpState s : {DpState{Table::S1, best.i, best.j}, DpState{Table::S1, first, best.k},
                            DpState{Table::S1, inst.next(best.k), inst.prev(best.i)}}) {
      auto part = reconstruct(inst, orb, dp, s);
      pairs.insert(pairs.end(), part.begin(), part.end());
    }
  }
  MatchingResult result = make_result(inst, std::move(pairs), "convex");
  if (result.value_sq != best.value_sq) {
    throw Error(ErrorCode::Internal, "reconstructed matching does not achieve the table value");
  }
  return result;
}

MatchingResult solve_convex(const Instance& inst, WorkCounter* counter) {
  const OrbitStructure orb = compute_orbits(inst, counter);
  const DpTables dp = compute_dp(inst, orb, NecessaryRule::Operational, counter);
  return solve_convex(inst, orb, dp, {}, counter);
}

MatchingResult solve_monochromatic(std::span<const Point2> points) {
  std::vector<ColoredPoint> colored;
  colored.reserve(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) {
    colored.push_back({points[k].x, points[k].y, k % 2 == 0 ? Color::Red : Color::Blue});
  }
  if (colored.size() % 2 != 0 || colored.empty()) {
    throw Error(ErrorCode::OddCount, "expected an even number (>= 2) of points, got " +
                                         std::to_string(points.size()));
  }
  const Instance inst = Instance::validate(std::move(colored));
  MatchingResult result = solve_convex(inst);
  result.solver = "convex-mono";
  return result;
}

}  // namespace bbm
