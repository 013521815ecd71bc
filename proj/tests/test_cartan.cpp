#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "loom/cartan.hpp"
#include "loom/errors.hpp"

using namespace loom;

namespace {

Weight classical(std::vector<long> xs) {
  std::vector<Rational> v;
  for (long x : xs) v.emplace_back(x);
  return Weight(v, std::nullopt);
}

Weight affine(std::vector<long> xs, long d) {
  std::vector<Rational> v;
  for (long x : xs) v.emplace_back(x);
  return Weight(v, Rational(d));
}

}  // namespace

TEST_CASE("A1 affine matrix and null vectors") {
  const auto cd = CartanData::build("A", 1);
  CHECK(cd.matrix() == IntMatrix{{2, -2}, {-2, 2}});
  CHECK(cd.marks() == std::vector<int>{1, 1});
  CHECK(cd.comarks() == std::vector<int>{1, 1});
}

TEST_CASE("A2 has all off-diagonal entries -1") {
  const auto cd = CartanData::build("A", 2);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(cd.entry(i, j) == (i == j ? 2 : -1));
  CHECK(cd.marks() == std::vector<int>{1, 1, 1});
}

TEST_CASE("C2 marks agree with the expansion of delta") {
  const auto cd = CartanData::build("C", 2);
  CHECK(cd.marks() == std::vector<int>{1, 2, 1});
  Weight sum = cd.zero(Ambient::Affine);
  for (int j = 0; j < cd.size(); ++j) sum += Rational(cd.marks()[j]) * cd.simple_root(j, Ambient::Affine);
  CHECK(sum == cd.delta());
}

TEST_CASE("null vectors, symmetrizability and node 0 for every supported family") {
  const std::vector<std::pair<std::string, int>> types{{"A", 1}, {"A", 2}, {"A", 4}, {"B", 3}, {"C", 2},
                                                       {"C", 3}, {"D", 4}, {"G", 2}, {"F", 4}, {"E", 6},
                                                       {"E", 7}, {"E", 8}};
  for (const auto& [t, r] : types) {
    CAPTURE(t);
    CAPTURE(r);
    const auto cd = CartanData::build(t, r);
    const int n = cd.size();
    for (int i = 0; i < n; ++i) {
      long row = 0, col = 0;
      for (int j = 0; j < n; ++j) {
        row += cd.entry(i, j) * cd.marks()[j];
        col += cd.comarks()[j] * cd.entry(j, i);
      }
      CHECK(row == 0);
      CHECK(col == 0);
      for (int j = 0; j < n; ++j)
        CHECK(cd.symmetrizers()[i] * cd.entry(i, j) == cd.symmetrizers()[j] * cd.entry(j, i));
    }
    CHECK(cd.marks()[0] == 1);
    CHECK(cd.comarks()[0] == 1);
    for (int j = 0; j < n; ++j) CHECK(cd.level(cd.simple_root(j, Ambient::Affine)) == 0);
  }
}

TEST_CASE("known marks for B3, F4 and G2") {
  CHECK(CartanData::build("B", 3).marks() == std::vector<int>{1, 1, 2, 2});
  CHECK(CartanData::build("B", 3).comarks() == std::vector<int>{1, 1, 2, 1});
  CHECK(CartanData::build("G", 2).marks() == std::vector<int>{1, 3, 2});
  CHECK(CartanData::build("G", 2).comarks() == std::vector<int>{1, 1, 2});
  CHECK(CartanData::build("F", 4).marks() == std::vector<int>{1, 2, 3, 4, 2});
  CHECK(CartanData::build("F", 4).comarks() == std::vector<int>{1, 2, 3, 2, 1});
}

TEST_CASE("pairings") {
  const auto cd = CartanData::build("A", 1);
  CHECK(cd.pairing(1, cd.fundamental(1, Ambient::Affine)) == 1);
  CHECK(cd.pairing(0, cd.delta()) == 0);
  CHECK(cd.pairing(0, cd.classical_fundamental(1)) == -1);
}

TEST_CASE("simple roots in fundamental coordinates") {
  const auto cd = CartanData::build("A", 1);
  CHECK(cd.simple_root(1, Ambient::Affine) == affine({-2, 2}, 0));
  CHECK(cd.simple_root(0, Ambient::Affine) == affine({2, -2}, 1));
}

TEST_CASE("reflections") {
  const auto cd = CartanData::build("A", 1);
  const Weight w = cd.classical_fundamental(1);
  CHECK(cd.reflect(1, w) == -w);
  CHECK(cd.reflect(0, w) == -w);
  const auto a3 = CartanData::build("A", 3);
  const Weight x = affine({3, -1, 2, -5}, 4);
  for (int i = 0; i < a3.size(); ++i) CHECK(a3.reflect(i, a3.reflect(i, x)) == x);
}

TEST_CASE("classical projection") {
  const auto cd = CartanData::build("A", 1);
  CHECK(cd.classical_project(cd.simple_root(0, Ambient::Affine)) == classical({2, -2}));
  CHECK(cd.classical_project(cd.delta()).is_zero());
  const Weight w = Rational(3) * cd.classical_fundamental(1, Ambient::Affine) + Rational(2) * cd.delta();
  CHECK(cd.classical_project(w) == Rational(3) * cd.classical_fundamental(1));
}

TEST_CASE("level-zero fundamental weights") {
  CHECK(CartanData::build("A", 1).classical_fundamental(1) == classical({-1, 1}));
  CHECK(CartanData::build("A", 2).classical_fundamental(1) == classical({-1, 1, 0}));
  const auto c2 = CartanData::build("C", 2);
  for (int i = 1; i <= 2; ++i) CHECK(c2.level(c2.classical_fundamental(i, Ambient::Affine)) == 0);
}

TEST_CASE("invalid types are rejected") {
  CHECK_THROWS_AS(CartanData::build("A", 0), InvalidCartanType);
  CHECK_THROWS_AS(CartanData::build("B", 1), InvalidCartanType);
  CHECK_THROWS_AS(CartanData::build("E", 5), InvalidCartanType);
  CHECK_THROWS_AS(CartanData::build("X", 2), InvalidCartanType);
}
