#pragma once

#include <string>
#include <vector>

#include "bbmatch/geometry.hpp"

namespace bbm {

struct MatchingResult {
  std::vector<IndexPair> pairs;  // normalized, sorted by first index
  double value_sq = 0.0;         // squared length of the longest segment
  double value = 0.0;            // sqrt(value_sq)
  std::string solver;
};

/// Normalizes and sorts `pairs` and fills in the bottleneck value.
MatchingResult make_result(const Instance& inst, std::vector<IndexPair> pairs, std::string solver);

}  // namespace bbm
