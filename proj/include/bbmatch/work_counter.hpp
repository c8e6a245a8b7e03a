#pragma once

#include <cstdint>

namespace bbm {

// Elementary-step counter used to check asymptotic bounds independently of
// wall-clock noise. Every algorithm that accepts one adds its loop trip counts.
struct WorkCounter {
  std::uint64_t steps = 0;

  void add(std::uint64_t k) noexcept { steps += k; }
};

inline void count(WorkCounter* counter, std::uint64_t k) noexcept {
  if (counter != nullptr) counter->add(k);
}

}  // namespace bbm
