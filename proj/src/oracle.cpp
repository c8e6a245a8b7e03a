#include "bbmatch/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace bbm::oracle {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double sq_dist(Point2 a, Point2 b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

// Non-crossing perfect matchings of points 0..n-1 in convex position, with
// `allowed(a, b)` deciding which pairs may be used.
class Enumerator {
 public:
  Enumerator(int n, std::function<bool(int, int)> allowed, const MatchingVisitor& visit)
      : n_(n), allowed_(std::move(allowed)), visit_(visit) {}

  std::size_t run() {
    pending_.clear();
    pairs_.clear();
    found_ = 0;
    if (n_ > 0) pending_.emplace_back(0, n_ - 1);
    step();
    return found_;
  }

 private:
  void step() {
    if (pending_.empty()) {
      ++found_;
      visit_(pairs_);
      return;
    }
    const auto [a, b] = pending_.back();
    pending_.pop_back();
    if ((b - a) % 2 == 0) {  // odd number of points: dead end
      pending_.emplace_back(a, b);
      return;
    }
    for (int k = a + 1; k <= b; k += 2) {
      if (!allowed_(a, k)) continue;
      pairs_.emplace_back(a, k);
      const std::size_t mark = pending_.size();
      if (k + 1 <= b) pending_.emplace_back(k + 1, b);
      if (a + 1 <= k - 1) pending_.emplace_back(a + 1, k - 1);
      step();
      pending_.resize(mark);
      pairs_.pop_back();
    }
    pending_.emplace_back(a, b);
  }

  int n_;
  std::function<bool(int, int)> allowed_;
  const MatchingVisitor& visit_;
  std::vector<std::pair<int, int>> pending_;
  std::vector<IndexPair> pairs_;
  std::size_t found_ = 0;
};

}  // namespace

MatchingResult oracle_dp(const Instance& inst) {
  const int n = inst.size();
  const auto un = static_cast<std::size_t>(n);
  // red[k] = number of red points among 0..k-1.
  std::vector<int> red(un + 1, 0);
  for (int k = 0; k < n; ++k) red[static_cast<std::size_t>(k) + 1] = red[static_cast<std::size_t>(k)] + (inst.is_red(k) ? 1 : 0);
  auto balanced = [&](int a, int b) {
    const int len = b - a + 1;
    return len % 2 == 0 && 2 * (red[static_cast<std::size_t>(b) + 1] - red[static_cast<std::size_t>(a)]) == len;
  };

  std::vector<double> best(un * un, kInf);
  std::vector<int> partner(un * un, -1);
  auto at = [&](int a, int b) { return static_cast<std::size_t>(a) * un + static_cast<std::size_t>(b); };

  for (int len = 2; len <= n; len += 2) {
    for (int a = 0; a + len - 1 < n; ++a) {
      const int b = a + len - 1;
      if (!balanced(a, b)) continue;
      double value = kInf;
      int choice = -1;
      for (int k = a + 1; k <= b; k += 2) {
        if (inst.color(a) == inst.color(k) || !balanced(a, k)) continue;
        double v = inst.dist_sq(a, k);
        if (k > a + 1) v = std::max(v, best[at(a + 1, k - 1)]);
        if (k < b) v = std::max(v, best[at(k + 1, b)]);
        if (v < value) {
          value = v;
          choice = k;
        }
      }
      best[at(a, b)] = value;
      partner[at(a, b)] = choice;
    }
  }

  std::vector<IndexPair> pairs;
  std::vector<std::pair<int, int>> pending{{0, n - 1}};
  while (!pending.empty()) {
    const auto [a, b] = pending.back();
    pending.pop_back();
    if (a > b) continue;
    const int k = partner[at(a, b)];
    pairs.emplace_back(a, k);
    pending.emplace_back(a + 1, k - 1);
    pending.emplace_back(k + 1, b);
  }
  return make_result(inst, std::move(pairs), "oracle");
}

std::size_t enumerate_all_matchings(const Instance& inst, const MatchingVisitor& visit) {
  if (inst.size() > kEnumerationLimit) {
    throw Error(ErrorCode::TooLarge, std::to_string(inst.size()) + " points exceeds the enumeration limit of " +
                                         std::to_string(kEnumerationLimit));
  }
  Enumerator e(inst.size(), [&](int a, int b) { return inst.color(a) != inst.color(b); }, visit);
  return e.run();
}

BruteForce bichromatic_bruteforce(const Instance& inst) {
  BruteForce out;
  out.value_sq = kInf;
  out.matchings = enumerate_all_matchings(inst, [&](std::span<const IndexPair> pairs) {
    double worst = 0.0;
    for (const auto& [a, b] : pairs) worst = std::max(worst, inst.dist_sq(a, b));
    if (worst < out.value_sq) {
      out.value_sq = worst;
      out.pairs.assign(pairs.begin(), pairs.end());
    }
  });
  return out;
}

BruteForce monochromatic_bruteforce(std::span<const Point2> points) {
  const int n = static_cast<int>(points.size());
  if (n > kEnumerationLimit) {
    throw Error(ErrorCode::TooLarge, std::to_string(n) + " points exceeds the enumeration limit");
  }
  check_convex_position(points);
  BruteForce out;
  out.value_sq = kInf;
  const MatchingVisitor visit = [&](std::span<const IndexPair> pairs) {
    double worst = 0.0;
    for (const auto& [a, b] : pairs) {
      worst = std::max(worst, sq_dist(points[static_cast<std::size_t>(a)], points[static_cast<std::size_t>(b)]));
    }
    if (worst < out.value_sq) {
      out.value_sq = worst;
      out.pairs.assign(pairs.begin(), pairs.end());
    }
  };
  Enumerator e(n, [](int, int) { return true; }, visit);
  out.matchings = e.run();
  return out;
}

VerifyReport verify_matching(const Instance& inst, std::span<const IndexPair> pairs) {
  VerifyReport report;
  const int n = inst.size();
  auto fail = [&](std::string why) {
    report.ok = false;
    report.violation = std::move(why);
    return report;
  };
  auto name = [](IndexPair p) { return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")"; };

  if (static_cast<int>(pairs.size()) != inst.pair_count()) {
    return fail("expected " + std::to_string(inst.pair_count()) + " pairs, got " + std::to_string(pairs.size()));
  }
  std::vector<int> partner(static_cast<std::size_t>(n), -1);
  double worst = 0.0;
  for (const auto& p : pairs) {
    const auto [a, b] = p;
    if (a < 0 || a >= n || b < 0 || b >= n) return fail("index out of range in pair " + name(p));
    if (a == b) return fail("degenerate pair " + name(p));
    if (partner[static_cast<std::size_t>(a)] != -1 || partner[static_cast<std::size_t>(b)] != -1) {
      return fail("point matched twice in pair " + name(p));
    }
    if (inst.color(a) == inst.color(b)) return fail("monochromatic pair " + name(p));
    partner[static_cast<std::size_t>(a)] = b;
    partner[static_cast<std::size_t>(b)] = a;
    worst = std::max(worst, inst.dist_sq(a, b));
  }

  // Chords of a convex polygon are pairwise non-crossing iff their endpoints
  // nest like parentheses.
  std::vector<int> open;
  for (int k = 0; k < n; ++k) {
    const int other = partner[static_cast<std::size_t>(k)];
    if (other > k) {
      open.push_back(k);
    } else if (open.back() != other) {
      const int inner = open.back();
      return fail("crossing pairs " + name(normalized(other, k)) + " and " +
                  name(normalized(inner, partner[static_cast<std::size_t>(inner)])));
    } else {
      open.pop_back();
    }
  }
  report.ok = true;
  report.value_sq = worst;
  return report;
}

std::vector<IndexPair> any_matching(const Instance& inst, int i, int j) {
  if (!inst.is_balanced(i, j)) {
    throw Error(ErrorCode::UnbalancedColors, "interval <" + std::to_string(i) + ".." + std::to_string(j) + ">");
  }
  std::vector<IndexPair> pairs;
  std::vector<std::pair<int, int>> pending{{i, j}};
  while (!pending.empty()) {
    const auto [a, b] = pending.back();
    pending.pop_back();
    // Other points of a convex set, scanned by angle around v_a, come in index order.
    const Color own = inst.color(a);
    int surplus = 0;
    int u = a;
    do {
      u = inst.next(u);
      surplus += inst.color(u) == own ? -1 : 1;
    } while (surplus != 1);
    pairs.emplace_back(a, u);
    if (u != inst.next(a)) pending.emplace_back(inst.next(a), inst.prev(u));
    if (u != b) pending.emplace_back(inst.next(u), b);
  }
  return pairs;
}

PolarityFrame PolarityFrame::make(Point2 from, Point2 to) {
  PolarityFrame f;
  f.from = from;
  f.to = to;
  f.chord = std::sqrt(sq_dist(from, to));
  const double ux = (to.x - from.x) / f.chord;
  const double uy = (to.y - from.y) / f.chord;
  // Right-hand normal of the directed chord.
  const double nx = uy;
  const double ny = -ux;
  const Point2 mid{(from.x + to.x) / 2.0, (from.y + to.y) / 2.0};
  const double sqrt3 = std::numbers::sqrt3;
  f.radius = f.chord / sqrt3;
  f.center = {mid.x + nx * f.chord / (2.0 * sqrt3), mid.y + ny * f.chord / (2.0 * sqrt3)};
  f.apex = {mid.x + nx * f.chord * sqrt3 / 2.0, mid.y + ny * f.chord * sqrt3 / 2.0};
  return f;
}

bool PolarityFrame::in_arc_region(Point2 x, double tol) const {
  const double side = (to.x - from.x) * (x.y - from.y) - (to.y - from.y) * (x.x - from.x);
  if (side > tol * chord * chord) return false;  // left of the chord
  return std::sqrt(sq_dist(x, center)) <= radius + tol * chord;
}

bool PolarityFrame::in_minus(Point2 x, double tol) const {
  return in_arc_region(x, tol) && std::sqrt(sq_dist(x, to)) >= chord - tol * chord;
}

bool PolarityFrame::in_plus(Point2 x, double tol) const {
  return in_arc_region(x, tol) && std::sqrt(sq_dist(x, from)) >= chord - tol * chord;
}

std::string_view to_string(Polarity p) {
  switch (p) {
    case Polarity::Negative: return "negative";
    case Polarity::Positive: return "positive";
    case Polarity::Violation: return "violation";
  }
  return "unknown";
}

Polarity polarity_check(const Instance& inst, const OrbitStructure& orb, const DpTables& dp, int i, int j) {
  const bool candidate = classify_pair(inst, orb, i, j) == PairKind::Diagonal && dp.filled(i, j) &&
                         dp.necessary(i, j) &&
                         inst.turning_angle(i, j) <= 2.0 * std::numbers::pi / 3.0 + kCandidateAngleTolerance;
  if (!candidate) {
    throw Error(ErrorCode::NotADiagonal,
                "(" + std::to_string(i) + "," + std::to_string(j) + ") is not a candidate diagonal");
  }
  const PolarityFrame frame = PolarityFrame::make(inst.point(i).position(), inst.point(j).position());
  const int orbit = orb.orbit_id[static_cast<std::size_t>(i)];
  bool all_minus = true;
  bool all_plus = true;
  for (int k = inst.next(i); k != j; k = inst.next(k)) {
    if (orb.orbit_id[static_cast<std::size_t>(k)] != orbit) continue;
    const Point2 x = inst.point(k).position();
    all_minus = all_minus && frame.in_minus(x, kPolarityTolerance);
    all_plus = all_plus && frame.in_plus(x, kPolarityTolerance);
  }
  if (all_minus) return Polarity::Negative;
  if (all_plus) return Polarity::Positive;
  return Polarity::Violation;
}

}  // namespace bbm::oracle
