#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "loom/energy.hpp"
#include "loom/sl2.hpp"

using namespace loom;

namespace {

struct Fixture {
  CartanData cd;
  PathKind kind;
  Realized<PathKind> b;
  explicit Fixture(const char* type, int rank, int i = 1)
      : cd(CartanData::build(type, rank)), kind(cd), b(fundamental_crystal(kind, i)) {}

  std::size_t node(const Weight& w) const { return *b.graph.find(Path::linear(w).key()); }
};

}  // namespace

TEST_CASE("A1 energy table") {
  Fixture f("A", 1);
  const Weight w = f.cd.classical_fundamental(1);
  const std::size_t p = f.node(w), m = f.node(-w);
  const auto t = energy_table(f.b.graph);
  CHECK(t.at(p, p) == 0);
  CHECK(t.at(p, m) == 1);
  CHECK(t.at(m, p) == 0);
  CHECK(t.at(m, m) == 0);
}

TEST_CASE("A2 energy is the strict order along the f-string") {
  // Label the vector representation 1 -> 2 -> 3 by f_1, f_2; the local
  // energy of b_a ⊗ b_b for the perfect crystal of level one is [a < b].
  Fixture f("A", 2);
  const auto& g = f.b.graph;
  const std::size_t b1 = g.seed, b2 = g.f_next[b1][1], b3 = g.f_next[b2][2];
  REQUIRE(b2 != kNoNode);
  REQUIRE(b3 != kNoNode);
  const std::vector<std::size_t> order{b1, b2, b3};
  const auto t = energy_table(g);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t c = 0; c < 3; ++c) CHECK(t.at(order[a], order[c]) == (a < c ? 1 : 0));
}

TEST_CASE("energy is independent of the traversal order") {
  for (auto [type, rank] : std::vector<std::pair<const char*, int>>{{"A", 1}, {"A", 2}, {"C", 2}}) {
    Fixture f(type, rank);
    const auto base = energy_table(f.b.graph);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) CHECK(energy_table(f.b.graph, 1, seed).chi == base.chi);
  }
}

TEST_CASE("a disconnected tensor square is rejected") {
  CHECK_THROWS_AS(energy_table(sl2::crystal_of(1)), DisconnectedTensorSquare);
}

TEST_CASE("grid size") {
  CHECK(choose_N(Fixture("A", 1).b.elements) == 1);
  CHECK(choose_N(Fixture("A", 2).b.elements) == 1);
  const auto cd = CartanData::build("A", 1);
  const Weight w = cd.classical_fundamental(1);
  const Path half({{w, ratio(1, 2)}, {-w, ratio(1, 2)}});
  const Path third({{w * Rational(2), ratio(1, 3)}, {-w, ratio(2, 3)}});
  CHECK(choose_N({half, third}) == 6);
  CHECK(coroot_grid_bound(CartanData::build("C", 2)) % choose_N(Fixture("C", 2).b.elements) == 0);
}

TEST_CASE("refinement") {
  Fixture f("A", 1);
  const Weight w = f.cd.classical_fundamental(1);
  const std::size_t p = f.node(w), m = f.node(-w);
  CHECK(refine(f.b, {p, m}, 1) == std::vector<std::size_t>{p, m});
  CHECK(refine(f.b, {p}, 2) == std::vector<std::size_t>{p, p});
  CHECK(refine(f.b, {m, p}, 2) == std::vector<std::size_t>{m, m, p, p});
}

TEST_CASE("major index") {
  Fixture f("A", 1);
  const Weight w = f.cd.classical_fundamental(1);
  const std::size_t p = f.node(w), m = f.node(-w);
  const auto t = energy_table(f.b.graph);
  CHECK(maj({p, p}, t) == 0);
  CHECK(maj({p, m}, t) == 1);
  CHECK(maj({m, p}, t) == 0);
  CHECK(maj({p, m, p, m}, t) == 1 + 3);
}
