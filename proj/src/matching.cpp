#include "bbmatch/matching.hpp"

#include <algorithm>
#include <cmath>

namespace bbm {

MatchingResult make_result(const Instance& inst, std::vector<IndexPair> pairs, std::string solver) {
  MatchingResult result;
  for (auto& p : pairs) p = normalized(p.first, p.second);

  // Perfect matchings have distinct first indices: bucket them in O(n).
  std::vector<int> partner(static_cast<std::size_t>(inst.size()), -1);
  bool distinct = true;
  for (const auto& [a, b] : pairs) {
    if (a < 0 || a >= inst.size() || partner[static_cast<std::size_t>(a)] != -1) {
      distinct = false;
      break;
    }
    partner[static_cast<std::size_t>(a)] = b;
  }
  if (distinct) {
    pairs.clear();
    for (int a = 0; a < inst.size(); ++a) {
      if (partner[static_cast<std::size_t>(a)] != -1) pairs.emplace_back(a, partner[static_cast<std::size_t>(a)]);
    }
  } else {
    std::sort(pairs.begin(), pairs.end());
  }

  double worst = 0.0;
  for (const auto& [a, b] : pairs) worst = std::max(worst, inst.dist_sq(a, b));
  result.pairs = std::move(pairs);
  result.value_sq = worst;
  result.value = std::sqrt(worst);
  result.solver = std::move(solver);
  return result;
}

}  // namespace bbm
