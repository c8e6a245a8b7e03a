#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "bbmatch/circle_solver.hpp"
#include "bbmatch/convex_solver.hpp"
#include "bbmatch/fixtures.hpp"
#include "bbmatch/generate.hpp"
#include "bbmatch/oracle.hpp"
#include "support/instances.hpp"

using namespace bbm;

TEST_CASE("circle fixtures") {
  const auto oct = solve_circle(fixtures::oct8());
  CHECK(oct.pairs == std::vector<IndexPair>{{0, 1}, {2, 3}, {4, 5}, {6, 7}});
  CHECK(oct.value == doctest::Approx(2.0 * std::sin(std::numbers::pi / 8)).epsilon(1e-12));
  CHECK(solve_circle(fixtures::hex6()).value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(solve_circle(fixtures::sq4()).value == doctest::Approx(std::numbers::sqrt2).epsilon(1e-12));
  CHECK(solve_circle(fixtures::rrbb4()).pairs == std::vector<IndexPair>{{0, 3}, {1, 2}});
  CHECK(solve_circle(fixtures::sq4()).solver == "circle");
}

TEST_CASE("component plan") {
  const std::vector<int> path{0, 1};
  const std::vector<double> rb{1.0, 9.0};
  const std::vector<double> br{9.0, 1.0};
  const auto plan = component_plan(path, rb, br);
  CHECK(plan.split == 1);
  CHECK(plan.value_sq == 1.0);
  CHECK(plan.red_blue.size() == 3u);
  CHECK(plan.red_blue[0] == -std::numeric_limits<double>::infinity());
  CHECK(plan.blue_red[2] == -std::numeric_limits<double>::infinity());

  const std::vector<int> single{0};
  CHECK(component_plan(single, std::vector<double>{4.0}, std::vector<double>{3.0}).value_sq == 3.0);
  CHECK(component_plan(single, std::vector<double>{2.0}, std::vector<double>{3.0}).value_sq == 2.0);

  // Ties keep the smallest split.
  const auto tie = component_plan(path, std::vector<double>{5.0, 5.0}, std::vector<double>{5.0, 5.0});
  CHECK(tie.split == 0);
  CHECK(tie.value_sq == 5.0);
}

TEST_CASE("non-concyclic input is rejected") {
  const auto inst = generate({6, Shape::Convex, Coloring::RandomBalanced, 3});
  CHECK_FALSE(is_concyclic(inst));
  try {
    (void)solve_circle(inst);
    FAIL("expected NotOnCircle");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotOnCircle);
  }
  CHECK(is_concyclic(fixtures::oct8()));
}

TEST_CASE("circle solver uses orbit edges and agrees with the convex solver") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int n = 1 + static_cast<int>(seed % 40);
    const auto coloring = static_cast<Coloring>(seed % 3);
    const auto inst = generate({n, Shape::Circle, coloring, seed});
    const auto orb = compute_orbits(inst);
    const auto result = solve_circle(inst);
    const auto report = oracle::verify_matching(inst, result.pairs);
    CHECK(report.ok);
    CHECK(report.value_sq == result.value_sq);
    for (const auto& [a, b] : result.pairs) CHECK(classify_pair(inst, orb, a, b) == PairKind::Edge);
    CHECK(result.value_sq == solve_convex(inst).value_sq);
  }
}

TEST_CASE("circle solver work is linear") {
  auto steps = [](int n) {
    const auto inst = generate({n, Shape::Circle, Coloring::RandomBalanced, 11});
    WorkCounter counter;
    (void)solve_circle(inst, &counter);
    return static_cast<double>(counter.steps);
  };
  const double ratio = steps(20000) / steps(10000);
  CHECK(ratio > 1.5);
  CHECK(ratio < 2.5);
}
