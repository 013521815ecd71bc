#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "loom/path_crystal.hpp"
#include "loom/serialize.hpp"

using namespace loom;

TEST_CASE("weight literals") {
  const auto a1 = CartanData::build("A", 1);
  const Weight w = a1.classical_fundamental(1, Ambient::Affine);
  CHECK(parse_weight_literal(a1, "2w1+1d") == Rational(2) * w + a1.delta());
  CHECK(parse_weight_literal(a1, " 2 w1 + 1 d ") == Rational(2) * w + a1.delta());
  CHECK(parse_weight_literal(a1, "3d") == Rational(3) * a1.delta());
  CHECK(parse_weight_literal(a1, "w1") == a1.classical_fundamental(1));
  CHECK(parse_weight_literal(a1, "w1", true) == w);

  const auto a2 = CartanData::build("A", 2);
  CHECK(parse_weight_literal(a2, "-w2+w1") == a2.classical_fundamental(1) - a2.classical_fundamental(2));

  CHECK_THROWS_AS(parse_weight_literal(a1, "2x1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_weight_literal(a1, "w3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_weight_literal(a1, ""), std::invalid_argument);
  CHECK_THROWS_AS(parse_weight_literal(a1, "2w1+"), std::invalid_argument);
}

TEST_CASE("graph JSON for the A1 fundamental crystal") {
  const auto cd = CartanData::build("A", 1);
  const auto b = fundamental_crystal(PathKind(cd), 1);
  const Json expected = Json::parse(R"({
    "edges": [{"dst": 1, "i": 1, "src": 0}, {"dst": 0, "i": 0, "src": 1}],
    "nodes": [
      {"eps": [1, 0], "id": "(-1/1,1/1)*1/1", "phi": [0, 1], "wt": ["-1/1", "1/1"]},
      {"eps": [0, 1], "id": "(1/1,-1/1)*1/1", "phi": [1, 0], "wt": ["1/1", "-1/1"]}
    ],
    "seed": 0,
    "truncated": false
  })");
  CHECK(to_json(b.graph) == expected);
  CHECK(to_json(b.graph).dump() == to_json(b.graph).dump());
}

TEST_CASE("cartan and report JSON") {
  const auto j = to_json(CartanData::build("C", 2));
  CHECK(j.at("marks") == Json({1, 2, 1}));
  CHECK(j.at("matrix").size() == 3);
  Report r;
  r.add("one", true);
  r.add("two", false, "broken");
  const auto jr = to_json(r);
  CHECK(jr.at("pass") == false);
  CHECK(jr.at("checks")[1].at("detail") == "broken");
}

TEST_CASE("DOT and summary output") {
  const auto cd = CartanData::build("A", 2);
  const auto b = fundamental_crystal(PathKind(cd), 1);
  const std::string dot = to_dot(b.graph);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("label=\"0\"") != std::string::npos);
  CHECK(dot.find("label=\"2\"") != std::string::npos);
  CHECK(summary(b.graph).find("nodes 3") != std::string::npos);
  CHECK(summary(b.graph).find("edges 3") != std::string::npos);
}

TEST_CASE("energy JSON") {
  const auto cd = CartanData::build("A", 1);
  const auto b = fundamental_crystal(PathKind(cd), 1);
  const auto j = to_json(energy_table(b.graph), "A1:w1");
  CHECK(j.at("N") == 1);
  CHECK(j.at("chi").size() == 4);
}
