#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>

#include "incpart/law_io.hpp"

using namespace incpart;

namespace {

const char* kCrp1 = R"({
  "n": 3,
  "kind": "partition",
  "entries": [
    {"composition": [3], "value": "1/3"},
    {"composition": [2, 1], "value": "1/6"},
    {"composition": [1, 2], "value": "1/6"},
    {"composition": [1, 1, 1], "value": "1/6"}
  ]
}
)";

std::string parse_error_of(const std::string& text) {
  try {
    parse_law_document(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("format_law writes the canonical layout") {
  const PartitionLaw p(3, {{{3}, Rational(1, 3)},
                           {{2, 1}, Rational(1, 6)},
                           {{1, 2}, Rational(1, 6)},
                           {{1, 1, 1}, Rational(1, 6)}});
  CHECK(format_law(p) == kCrp1);
}

TEST_CASE("parse and format round trip") {
  std::mt19937_64 rng(9);
  for (int n = 1; n <= 6; ++n) {
    const auto p = random_partially_exchangeable_law(n, rng);
    const auto text = format_law(p);
    const auto back = to_partition_law(parse_law_document(text));
    CHECK(back == p);
    CHECK(format_law(back) == text);
  }
}

TEST_CASE("inputs are reduced on load") {
  auto doc = parse_law_document(R"({"n": 1, "kind": "increment",
    "entries": [{"composition": [1], "value": "4/4"}]})");
  const auto q = to_increment_law(doc);
  CHECK(to_string(q.at({1})) == "1/1");
}

TEST_CASE("kind must match") {
  auto doc = parse_law_document(kCrp1);
  CHECK_THROWS_AS(to_increment_law(doc), ParseError);
}

TEST_CASE("sparse laws are rejected unless zero-filling is requested") {
  auto doc = parse_law_document(R"({"n": 3, "kind": "increment",
    "entries": [{"composition": [3], "value": "1"}]})");
  CHECK_THROWS_AS(to_increment_law(doc), IncompleteLawError);
  const auto q = to_increment_law(doc, true);
  CHECK(q.table().size() == 4);
  CHECK(q.at({1, 2}) == 0);
}

TEST_CASE("malformed files report where") {
  CHECK(parse_error_of("{\"n\": 3,\n  \"kind\": }").find("line 2") != std::string::npos);
  CHECK(parse_error_of(R"({"kind": "partition", "entries": []})").find("'n'") != std::string::npos);
  CHECK(parse_error_of(R"({"n": 2, "kind": "other", "entries": []})").find("law.kind") !=
        std::string::npos);
  CHECK(parse_error_of(R"({"n": 2, "kind": "partition", "entries": [
        {"composition": [1, 1], "value": "1/0"}]})")
            .find("entries[0].value") != std::string::npos);
  CHECK(parse_error_of(R"({"n": 2, "kind": "partition", "entries": [
        {"composition": [2], "value": "1"}, {"composition": [1, 2], "value": "0"}]})")
            .find("entries[1].composition") != std::string::npos);
  CHECK(parse_error_of(R"({"n": 2, "kind": "partition", "entries": [
        {"composition": [2], "value": "1"}, {"composition": [2], "value": "0"}]})")
            .find("duplicate") != std::string::npos);
  CHECK(parse_error_of(R"({"n": 2, "kind": "partition", "entries": [
        {"composition": [2], "value": 1}]})")
            .find("entries[0].value") != std::string::npos);
  CHECK(parse_error_of(R"({"n": 2, "kind": "partition", "entries": [
        {"composition": [0, 2], "value": "1"}]})")
            .find("entries[0].composition") != std::string::npos);
}
