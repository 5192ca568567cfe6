#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "psg/io.hpp"

using namespace psg;

namespace {

// The coordinate swap on F_2 x F_2, written by hand.
const char* kSwapInstance = R"({
  "schema_version": 1,
  "characteristic": 2,
  "group": {"cyclic": 2},
  "algebra": {"product": ["field", "field"]},
  "ring_action": {
    "domains": {"1": [[1, 0], [0, 1]]},
    "maps": {"1": [[0, 1], [1, 0]]}
  },
  "guards": {"dim": 12, "pairs": 4096}
})";

std::string patched(const std::string& from, const std::string& to) {
  std::string s = kSwapInstance;
  auto pos = s.find(from);
  REQUIRE(pos != std::string::npos);
  return s.replace(pos, from.size(), to);
}

}  // namespace

TEST_CASE("ring action instance parses, validates, and round-trips") {
  InstanceFile file = parse_instance_text(kSwapInstance);
  CHECK(file.guards.dim == 12);
  CHECK(file.guards.pairs == 4096);
  const auto& action = std::get<PartialRingAction>(file.instance);
  CHECK(validate(action).ok());
  CHECK(action.algebra.dim() == 2);
  CHECK(action.apply(1, Vec{1, 0}) == Vec{0, 1});

  InstanceFile again = parse_instance_text(serialize_instance(file).dump());
  CHECK(instances_equal(file.instance, again.instance));
  CHECK(again.guards.dim == 12);
}

TEST_CASE("domain bases may be listed in any spanning order") {
  // Same ideal of F_2^2, listed on the basis {(1,1), (0,1)}; image rows are
  // the swapped images of those listed vectors.
  std::string text = patched("[[1, 0], [0, 1]]", "[[1, 1], [0, 1]]");
  auto pos = text.find("[[0, 1], [1, 0]]");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 16, "[[1, 1], [1, 0]]");
  InstanceFile file = parse_instance_text(text);
  const auto& a = std::get<PartialRingAction>(file.instance);
  CHECK(validate(a).ok());
  CHECK(a.apply(1, Vec{1, 0}) == Vec{0, 1});
  CHECK(a.apply(1, Vec{0, 1}) == Vec{1, 0});
}

TEST_CASE("global and set instances round-trip") {
  const char* global_text = R"({
    "schema_version": 1,
    "characteristic": 2,
    "group": {"cyclic": 2},
    "algebra": {"matrix": 2},
    "global_action": {"maps": {"1": [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]}}
  })";
  InstanceFile gf = parse_instance_text(global_text);
  const auto& ga = std::get<GlobalAction>(gf.instance);
  CHECK(validate(ga).ok());
  CHECK(instances_equal(gf.instance,
                        parse_instance_text(serialize_instance(gf).dump()).instance));

  const char* set_text = R"({
    "schema_version": 1,
    "characteristic": 2,
    "group": {"cyclic": 2},
    "set_action": {
      "points": 2,
      "subsets": {"1": [0]},
      "theta": {"1": [0, -1]}
    }
  })";
  InstanceFile sf = parse_instance_text(set_text);
  const auto& sa = std::get<SetPartialAction>(sf.instance);
  CHECK(validate_set_action(sa).ok());
  CHECK(sa.subsets[1] == std::vector<int>{0});
  CHECK(instances_equal(sf.instance,
                        parse_instance_text(serialize_instance(sf).dump()).instance));
}

TEST_CASE("structure constants and group tables parse with checks") {
  const char* sc_text = R"({
    "schema_version": 1,
    "characteristic": 3,
    "group": {"table": [[0, 1], [1, 0]]},
    "algebra": {"structure_constants": [[[1, 0], [0, 1]], [[0, 1], [2, 0]]]},
    "global_action": {"maps": {"1": [[1, 0], [0, 1]]}}
  })";
  InstanceFile f = parse_instance_text(sc_text);
  const auto& ga = std::get<GlobalAction>(f.instance);
  CHECK(ga.algebra.characteristic() == 3);
  CHECK(ga.algebra.identity() == Vec{1, 0});  // F_9 = F_3[t]/(t^2 + 1)

  // A non-associative cube is rejected with the offending triple named.
  const char* bad_sc = R"({
    "schema_version": 1,
    "characteristic": 2,
    "group": {"cyclic": 1},
    "algebra": {"structure_constants": [[[0, 1], [0, 0]], [[1, 0], [0, 0]]]},
    "global_action": {"maps": {}}
  })";
  CHECK_THROWS_AS(parse_instance_text(bad_sc), RangeError);

  // A non-group table is rejected as a range problem, not a crash.
  CHECK_THROWS_WITH_AS(
      parse_instance_text(R"({"schema_version": 1, "characteristic": 2,
        "group": {"table": [[0, 0], [0, 0]]}, "algebra": "field",
        "global_action": {"maps": {"1": [[1]]}}})"),
      doctest::Contains("group"), RangeError);
}

TEST_CASE("errors are anchored") {
  // Bad JSON: the message names the line.
  try {
    parse_instance_text("{\n  \"schema_version\": 1,\n  oops\n}");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }

  // Out-of-range residue: RangeError names the field.
  try {
    parse_instance_text(patched("[[0, 1], [1, 0]]", "[[0, 2], [1, 0]]"));
    FAIL("expected RangeError");
  } catch (const RangeError& e) {
    CHECK(e.field.find("ring_action.maps.1") != std::string::npos);
  }

  // Missing field: ParseError names the dotted path.
  CHECK_THROWS_WITH_AS(parse_instance_text(patched("\"maps\"", "\"mapz\"")),
                       doctest::Contains("ring_action.maps"), ParseError);

  // A dependent basis is a range problem.
  CHECK_THROWS_AS(
      parse_instance_text(patched("[[1, 0], [0, 1]]", "[[1, 0], [1, 0]]")),
      RangeError);
}

TEST_CASE("top-level shape errors") {
  CHECK_THROWS_AS(parse_instance_text(patched("\"schema_version\": 1",
                                              "\"schema_version\": 2")),
                  RangeError);
  CHECK_THROWS_AS(parse_instance_text(patched("\"characteristic\": 2",
                                              "\"characteristic\": 4")),
                  RangeError);
  // No action block at all.
  CHECK_THROWS_AS(parse_instance_text(R"({"schema_version": 1,
    "characteristic": 2, "group": {"cyclic": 2}, "algebra": "field"})"),
                  ParseError);
  // Two action blocks.
  CHECK_THROWS_AS(parse_instance_text(patched(
                      "\"ring_action\"",
                      "\"set_action\": {\"points\": 1, \"subsets\": {\"1\": []},"
                      " \"theta\": {\"1\": [-1]}}, \"ring_action\"")),
                  ParseError);
  // The identity element must not be listed.
  CHECK_THROWS_AS(parse_instance_text(patched("\"domains\": {\"1\"",
                                              "\"domains\": {\"0\"")),
                  RangeError);
  // Unknown group element key.
  CHECK_THROWS_AS(parse_instance_text(patched("\"domains\": {\"1\"",
                                              "\"domains\": {\"7\"")),
                  RangeError);
}
