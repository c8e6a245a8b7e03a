#include "bbmatch/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <json.hpp>

#include "bbmatch/circle_solver.hpp"
#include "bbmatch/convex_solver.hpp"
#include "bbmatch/orbits.hpp"

namespace bbm {

BenchMode parse_bench_mode(std::string_view name) {
  if (name == "convex") return BenchMode::Convex;
  if (name == "circle") return BenchMode::Circle;
  if (name == "orbits") return BenchMode::Orbits;
  throw Error(ErrorCode::Parse, "unknown bench mode '" + std::string(name) + "'");
}

const char* to_string(BenchMode mode) {
  switch (mode) {
    case BenchMode::Convex: return "convex";
    case BenchMode::Circle: return "circle";
    case BenchMode::Orbits: return "orbits";
  }
  return "?";
}

double fit_exponent(std::span<const double> xs, std::span<const double> ys) {
  const std::size_t m = std::min(xs.size(), ys.size());
  if (m < 2) return 0.0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < m; ++k) {
    const double lx = std::log(xs[k]);
    const double ly = std::log(std::max(ys[k], 1e-12));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = static_cast<double>(m) * sxx - sx * sx;
  return denom == 0.0 ? 0.0 : (static_cast<double>(m) * sxy - sx * sy) / denom;
}

namespace {

void run_once(BenchMode mode, const Instance& inst, WorkCounter* counter) {
  switch (mode) {
    case BenchMode::Convex: (void)solve_convex(inst, counter); break;
    case BenchMode::Circle: (void)solve_circle(inst, counter); break;
    case BenchMode::Orbits: {
      const auto orb = compute_orbits(inst, counter);
      (void)build_orbit_graph(inst, orb, counter);
      break;
    }
  }
}

}  // namespace

std::uint64_t count_steps(BenchMode mode, const Instance& inst) {
  WorkCounter counter;
  run_once(mode, inst, &counter);
  return counter.steps;
}

BenchReport run_bench(const BenchConfig& config) {
  if (config.repeats < 3) throw Error(ErrorCode::Parse, "bench needs at least 3 repeats");
  for (std::size_t k = 1; k < config.sizes.size(); ++k) {
    if (config.sizes[k] <= config.sizes[k - 1]) throw Error(ErrorCode::Parse, "bench sizes must be strictly increasing");
  }
  BenchReport report;
  for (const BenchMode mode : config.modes) {
    std::vector<double> xs, times, steps;
    for (const int n : config.sizes) {
      const GenSpec spec{n, mode == BenchMode::Circle ? Shape::Circle : Shape::Convex, config.coloring,
                         config.seed + static_cast<std::uint64_t>(n)};
      const Instance inst = generate(spec);
      std::vector<double> ms;
      for (int r = 0; r < config.repeats; ++r) {
        const auto start = std::chrono::steady_clock::now();
        run_once(mode, inst, nullptr);
        ms.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
      }
      std::sort(ms.begin(), ms.end());
      const BenchRow row{mode, n, ms[ms.size() / 2], ms.front(), count_steps(mode, inst)};
      report.rows.push_back(row);
      xs.push_back(n);
      times.push_back(row.median_ms);
      steps.push_back(static_cast<double>(row.steps));
    }
    report.time_exponent[mode] = fit_exponent(xs, times);
    report.step_exponent[mode] = fit_exponent(xs, steps);
  }
  return report;
}

std::string to_json(const BenchReport& report) {
  nlohmann::ordered_json out;
  out["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    out["rows"].push_back({{"mode", to_string(row.mode)},
                           {"n", row.n},
                           {"median_ms", row.median_ms},
                           {"min_ms", row.min_ms},
                           {"steps", row.steps}});
  }
  for (const auto& [mode, e] : report.time_exponent) {
    out["exponents"][to_string(mode)] = {{"time", e}, {"steps", report.step_exponent.at(mode)}};
  }
  return out.dump(2);
}

}  // namespace bbm
