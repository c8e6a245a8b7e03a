#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "bbmatch/bench.hpp"
#include "bbmatch/circle_solver.hpp"
#include "bbmatch/convex_solver.hpp"
#include "bbmatch/fixtures.hpp"
#include "bbmatch/generate.hpp"
#include "bbmatch/instance_io.hpp"
#include "bbmatch/oracle.hpp"
#include "bbmatch/orbits.hpp"
#include "bbmatch/render.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitValidation = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitInternal = 4;

int exit_code(bbm::ErrorCode code) {
  switch (code) {
    case bbm::ErrorCode::NotOnCircle:
    case bbm::ErrorCode::NotADiagonal:
    case bbm::ErrorCode::TooLarge: return kExitPrecondition;
    case bbm::ErrorCode::Internal:
    case bbm::ErrorCode::Incomparable: return kExitInternal;
    default: return kExitValidation;
  }
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    bbm::io::write_file(path, text);
  }
}

// --input and --fixture are shared by every instance-consuming subcommand.
struct InstanceSource {
  std::string input;
  std::string fixture;

  void attach(CLI::App* cmd) {
    auto* in = cmd->add_option("-i,--input", input, "instance file (text or JSON)");
    auto* fx = cmd->add_option("--fixture", fixture, "built-in instance: SQ4, RRBB4, HEX6, OCT8");
    in->excludes(fx);
  }

  std::vector<bbm::ColoredPoint> raw_points() const {
    if (!fixture.empty()) return bbm::fixtures::by_name(fixture).points();
    if (input.empty()) throw bbm::Error(bbm::ErrorCode::Parse, "one of --input or --fixture is required");
    return bbm::io::parse_points(bbm::io::read_file(input));
  }

  bbm::Instance load() const { return bbm::Instance::validate(raw_points()); }
};

json pairs_json(const std::vector<bbm::IndexPair>& pairs) {
  json arr = json::array();
  for (const auto& [a, b] : pairs) arr.push_back({a, b});
  return arr;
}

std::uint64_t resolve_seed(std::uint64_t flag) {
  if (const char* env = std::getenv("BBMATCH_SEED"); env != nullptr && *env != '\0') {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw bbm::Error(bbm::ErrorCode::Parse, std::string("BBMATCH_SEED is not an integer: ") + env);
    }
  }
  return flag;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bottleneck bichromatic non-crossing matchings in convex position"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a random instance");
  bbm::GenSpec gen_spec;
  std::string gen_shape = "convex", gen_coloring = "random", gen_format = "text", gen_out;
  gen->add_option("-n,--pairs", gen_spec.n, "points of each color")->required()->check(CLI::PositiveNumber);
  gen->add_option("--shape", gen_shape)->check(CLI::IsMember({"circle", "convex"}));
  gen->add_option("--coloring", gen_coloring)->check(CLI::IsMember({"random", "alternating", "grouped"}));
  gen->add_option("--seed", gen_spec.seed, "overridden by BBMATCH_SEED");
  gen->add_option("--format", gen_format)->check(CLI::IsMember({"text", "json"}));
  gen->add_option("-o,--output", gen_out, "file to write (default stdout)");

  // solve
  auto* solve = app.add_subcommand("solve", "compute a bottleneck matching");
  InstanceSource solve_src;
  solve_src.attach(solve);
  std::string solve_mode = "convex", solve_output = "json", solve_emit;
  bool solve_mono = false;
  solve->add_option("--mode", solve_mode)->check(CLI::IsMember({"convex", "circle", "oracle"}));
  solve->add_flag("--mono", solve_mono, "ignore colors; any two points may be matched");
  solve->add_option("--output", solve_output)->check(CLI::IsMember({"json", "text"}));
  solve->add_option("--emit-matching", solve_emit, "also write {\"pairs\":...} to this file");

  // verify
  auto* verify = app.add_subcommand("verify", "check a matching against an instance");
  InstanceSource verify_src;
  verify_src.attach(verify);
  std::string verify_matching_path;
  verify->add_option("-m,--matching", verify_matching_path)->required();

  // orbits
  auto* orbits = app.add_subcommand("orbits", "dump the orbit structure as JSON");
  InstanceSource orbits_src;
  orbits_src.attach(orbits);

  // bench
  auto* bench = app.add_subcommand("bench", "time the solvers on generated instances");
  bbm::BenchConfig bench_cfg;
  std::vector<std::string> bench_modes{"convex", "circle", "orbits"};
  std::string bench_coloring = "alternating";
  bench_cfg.sizes = {250, 500, 1000};
  bench->add_option("--sizes", bench_cfg.sizes, "pair counts, strictly increasing")->delimiter(',');
  bench->add_option("--repeats", bench_cfg.repeats)->check(CLI::Range(3, 1000));
  bench->add_option("--modes", bench_modes)->delimiter(',')->check(CLI::IsMember({"convex", "circle", "orbits"}));
  bench->add_option("--coloring", bench_coloring)->check(CLI::IsMember({"random", "alternating", "grouped"}));
  bench->add_option("--seed", bench_cfg.seed, "overridden by BBMATCH_SEED");

  // render
  auto* render = app.add_subcommand("render", "draw an instance as SVG");
  InstanceSource render_src;
  render_src.attach(render);
  std::string render_matching, render_out;
  bool render_solve = false, render_orbits = false;
  render->add_option("-m,--matching", render_matching, "matching file to draw");
  render->add_flag("--solve", render_solve, "draw the optimal matching");
  render->add_flag("--orbits", render_orbits, "shade orbits");
  render->add_option("-o,--output", render_out, "file to write (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help and version exit 0; every usage error is a validation error.
    return app.exit(e) == 0 ? 0 : kExitValidation;
  }

  try {
    if (gen->parsed()) {
      gen_spec.shape = bbm::parse_shape(gen_shape);
      gen_spec.coloring = bbm::parse_coloring(gen_coloring);
      gen_spec.seed = resolve_seed(gen_spec.seed);
      const auto inst = bbm::generate(gen_spec);
      emit(gen_format == "json" ? bbm::io::write_json(inst.points()) + "\n" : bbm::io::write_text(inst.points()),
           gen_out);
      return 0;
    }

    if (solve->parsed()) {
      bbm::MatchingResult result;
      int size = 0;
      if (solve_mono) {
        if (solve_mode != "convex") throw bbm::Error(bbm::ErrorCode::Parse, "--mono requires --mode convex");
        std::vector<bbm::Point2> positions;
        for (const auto& p : solve_src.raw_points()) positions.push_back(p.position());
        size = static_cast<int>(positions.size());
        result = bbm::solve_monochromatic(positions);
      } else {
        const auto inst = solve_src.load();
        size = inst.size();
        if (solve_mode == "convex") {
          result = bbm::solve_convex(inst);
        } else if (solve_mode == "circle") {
          result = bbm::solve_circle(inst);
        } else {
          result = bbm::oracle::oracle_dp(inst);
        }
        const auto check = bbm::oracle::verify_matching(inst, result.pairs);
        if (!check.ok) throw bbm::Error(bbm::ErrorCode::Internal, "solver produced an invalid matching: " + check.violation);
      }
      if (solve_output == "json") {
        json out;
        out["mode"] = solve_mode;
        out["n"] = size / 2;
        out["value"] = result.value;
        out["value_sq"] = result.value_sq;
        out["pairs"] = pairs_json(result.pairs);
        if (solve_mono) out["mono"] = true;
        std::cout << out.dump() << "\n";
      } else {
        char line[64];
        std::snprintf(line, sizeof(line), "%.17g", result.value);
        std::cout << "mode " << solve_mode << "\nn " << size / 2 << "\nvalue " << line << "\n";
        std::snprintf(line, sizeof(line), "%.17g", result.value_sq);
        std::cout << "value_sq " << line << "\n";
        for (const auto& [a, b] : result.pairs) std::cout << a << " " << b << "\n";
      }
      if (!solve_emit.empty()) {
        json doc;
        doc["pairs"] = pairs_json(result.pairs);
        bbm::io::write_file(solve_emit, doc.dump() + "\n");
      }
      return 0;
    }

    if (verify->parsed()) {
      const auto inst = verify_src.load();
      const auto pairs = bbm::io::parse_matching_json(bbm::io::read_file(verify_matching_path));
      const auto report = bbm::oracle::verify_matching(inst, pairs);
      json out;
      out["ok"] = report.ok;
      if (report.ok) {
        out["value_sq"] = report.value_sq;
      } else {
        out["violation"] = report.violation;
      }
      std::cout << out.dump() << "\n";
      return report.ok ? 0 : kExitValidation;
    }

    if (orbits->parsed()) {
      const auto inst = orbits_src.load();
      const auto orb = bbm::compute_orbits(inst);
      const auto graph = bbm::build_orbit_graph(inst, orb);
      json out;
      out["o"] = orb.o;
      out["orbits"] = orb.orbits;
      out["succ"] = graph.succ;
      out["order"] = graph.order;
      json comps = json::array();
      for (const auto& path : graph.components) comps.push_back({{"path", path}});
      out["components"] = comps;
      out["max_red_blue_sq"] = graph.max_red_blue_sq;
      out["max_blue_red_sq"] = graph.max_blue_red_sq;
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (bench->parsed()) {
      bench_cfg.modes.clear();
      for (const auto& m : bench_modes) bench_cfg.modes.push_back(bbm::parse_bench_mode(m));
      bench_cfg.coloring = bbm::parse_coloring(bench_coloring);
      bench_cfg.seed = resolve_seed(bench_cfg.seed);
      std::cout << bbm::to_json(bbm::run_bench(bench_cfg)) << "\n";
      return 0;
    }

    if (render->parsed()) {
      const auto inst = render_src.load();
      std::vector<bbm::IndexPair> pairs;
      if (!render_matching.empty()) {
        pairs = bbm::io::parse_matching_json(bbm::io::read_file(render_matching));
      } else if (render_solve) {
        pairs = bbm::solve_convex(inst).pairs;
      }
      bbm::RenderOptions options;
      options.matching = pairs;
      options.show_orbits = render_orbits;
      emit(bbm::render_svg(inst, options), render_out);
      return 0;
    }
  } catch (const bbm::Error& e) {
    std::cerr << "bbmatch: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "bbmatch: " << e.what() << "\n";
    return kExitInternal;
  }
  return 0;
}
