#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "bbmatch/generate.hpp"

namespace bbm {

enum class BenchMode { Convex, Circle, Orbits };

BenchMode parse_bench_mode(std::string_view name);
const char* to_string(BenchMode mode);

struct BenchConfig {
  std::vector<int> sizes;  // pairs count n, strictly increasing
  int repeats = 3;
  std::vector<BenchMode> modes;
  Coloring coloring = Coloring::Alternating;
  std::uint64_t seed = 1;
};

struct BenchRow {
  BenchMode mode;
  int n;
  double median_ms;
  double min_ms;
  std::uint64_t steps;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::map<BenchMode, double> time_exponent;
  std::map<BenchMode, double> step_exponent;
};

/// Least-squares slope of log(ys) against log(xs).
double fit_exponent(std::span<const double> xs, std::span<const double> ys);

/// Times one solve of `mode` per repeat on a freshly generated instance of each
/// size (circle instances for Circle, convex polygons otherwise).
BenchReport run_bench(const BenchConfig& config);

/// Steps counted by one run of `mode` on `inst`.
std::uint64_t count_steps(BenchMode mode, const Instance& inst);

std::string to_json(const BenchReport& report);

}  // namespace bbm
