#include <doctest.h>

#include <filesystem>

#include "bbmatch/fixtures.hpp"
#include "bbmatch/instance_io.hpp"
#include "support/instances.hpp"

using namespace bbm;

TEST_CASE("text format parses with comments and blank lines") {
  const auto points = io::parse_points_text(
      "# square\n"
      "4\n"
      "1 0 R   # first\n"
      "\n"
      "0 1 B\n"
      "-1 0 R\n"
      "0 -1 B\n");
  CHECK(points == fixtures::sq4().points());
}

TEST_CASE("json format parses") {
  const auto points = io::parse_points(
      R"({"points":[{"x":1,"y":0,"c":"R"},{"x":0,"y":1,"c":"R"},{"x":-1,"y":0,"c":"B"},{"x":0,"y":-1,"c":"B"}]})");
  CHECK(points == fixtures::rrbb4().points());
}

TEST_CASE("malformed input is a Parse error") {
  for (const char* text : {"3\n1 0 R\n0 1 B\n", "2\n1 0 R\n0 1 X\n", "2\n1 0 R\n0 one B\n", "x\n", "2\n1 0 R\n",
                           "{\"points\":[{\"x\":1}]}", "{\"points\":3}"}) {
    CAPTURE(text);
    try {
      (void)io::parse_points(text);
      FAIL("expected a parse error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Parse);
    }
  }
}

TEST_CASE("write then parse is bit-exact in both formats") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto inst = testing::random_instance(2 + 2 * static_cast<int>(seed % 30), seed);
    CHECK(io::parse_points(io::write_text(inst.points())) == inst.points());
    CHECK(io::parse_points(io::write_json(inst.points())) == inst.points());
  }
}

TEST_CASE("files round-trip and load validates") {
  const auto dir = std::filesystem::temp_directory_path() / "bbmatch_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "oct8.txt";
  io::write_file(path, io::write_text(fixtures::oct8().points()));
  CHECK(io::load_instance(path).points() == fixtures::oct8().points());
  io::write_file(path, "4\n1 0 R\n0 1 R\n-1 0 R\n0 -1 B\n");
  CHECK_THROWS_AS((void)io::load_instance(path), Error);
  CHECK_THROWS_AS((void)io::read_file(dir / "missing.txt"), Error);
  std::filesystem::remove_all(dir);
}

TEST_CASE("matching documents") {
  CHECK(io::parse_matching_json(R"({"pairs":[[0,3],[1,2]]})") == std::vector<IndexPair>{{0, 3}, {1, 2}});
  CHECK(io::parse_matching_json(R"({"mode":"convex","pairs":[]})").empty());
  CHECK_THROWS_AS((void)io::parse_matching_json(R"({"pairs":[[0]]})"), Error);
  CHECK_THROWS_AS((void)io::parse_matching_json("[]"), Error);
}
