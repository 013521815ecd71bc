#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "loom/errors.hpp"
#include "loom/path.hpp"

using namespace loom;

namespace {

const CartanData& a1() {
  static const auto cd = CartanData::build("A", 1);
  return cd;
}

const CartanData& a2() {
  static const auto cd = CartanData::build("A", 2);
  return cd;
}

Weight w1() { return a1().classical_fundamental(1); }

Path pi(const Weight& w) { return Path::linear(w); }

}  // namespace

TEST_CASE("canonical form drops pauses and merges equal directions") {
  const Weight w = w1();
  const Path p({{w * Rational(2), ratio(1, 4)}, {w * Rational(2), ratio(1, 4)}, {w * Rational(0), ratio(1, 2)}});
  CHECK(p == pi(w));
  CHECK(Path({{w * Rational(0), Rational(1)}}).is_constant());
  CHECK_THROWS_AS(Path({{w, ratio(1, 2)}}), std::invalid_argument);
  CHECK_THROWS_AS(Path({{w, ratio(1, 2)}, {w * Rational(0), ratio(1, 2)}}), std::invalid_argument);
}

TEST_CASE("statistics of the constant path") {
  const Path p = Path::constant(3, Ambient::Classical);
  for (int i = 0; i < 3; ++i) {
    CHECK(epsilon(a2(), p, i) == 0);
    CHECK(phi(a2(), p, i) == 0);
    CHECK(height_profile(a2(), p, i).max == 0);
  }
}

TEST_CASE("statistics of fundamental paths") {
  const Path p = pi(w1());
  CHECK(epsilon(a1(), p, 1) == 0);
  CHECK(phi(a1(), p, 1) == 1);
  CHECK(epsilon(a1(), p, 0) == 1);
  CHECK(phi(a1(), p, 0) == 0);

  const Path q = pi(a2().classical_fundamental(1));
  CHECK(epsilon(a2(), q, 0) == 1);
  CHECK(epsilon(a2(), q, 1) == 0);
  CHECK(epsilon(a2(), q, 2) == 0);
}

TEST_CASE("height profiles") {
  const Path p = pi(w1());
  const auto h0 = height_profile(a1(), p, 0);
  CHECK(h0.max == 1);
  CHECK(h0.values.back() == 1);
  CHECK(h0.values.front() == 0);
  const auto h1 = height_profile(a1(), p, 1);
  CHECK(h1.max == 0);
  CHECK(h1.values.back() == -1);
}

TEST_CASE("raising operators") {
  CHECK(raise(a1(), pi(w1()), 0) == pi(-w1()));
  CHECK_FALSE(raise(a1(), pi(w1()), 1));
  const Weight v1 = a2().classical_fundamental(1), v2 = a2().classical_fundamental(2);
  CHECK(raise(a2(), pi(v1), 0) == pi(-v2));
}

TEST_CASE("lowering operators") {
  CHECK(lower(a1(), pi(w1()), 1) == pi(-w1()));
  CHECK_FALSE(lower(a1(), pi(-w1()), 1));
}

TEST_CASE("quasi-inverse on a mixed path") {
  // Half ϖ_1 then half -ϖ_1 after doubling: a two-segment path in A_2.
  const Weight v1 = a2().classical_fundamental(1), v2 = a2().classical_fundamental(2);
  const Path p = concat({pi(v1), pi(v2), pi(-v1)});
  for (int i = 0; i < 3; ++i) {
    if (auto q = lower(a2(), p, i)) CHECK(raise(a2(), *q, i) == p);
    if (auto q = raise(a2(), p, i)) CHECK(lower(a2(), *q, i) == p);
  }
}

TEST_CASE("root operators match reflection of a linear path (independent oracle)") {
  // For λ with ⟨α_i^∨, λ⟩ = n > 0, f_i^n π_λ = π_{s_i λ} and f_i^{n+1} π_λ = 0.
  const auto a3 = CartanData::build("A", 3);
  const std::vector<Weight> lambdas{a3.classical_fundamental(1) * Rational(2),
                                    a3.classical_fundamental(1) + a3.classical_fundamental(3),
                                    a3.classical_fundamental(2) * Rational(3)};
  for (const auto& lam : lambdas)
    for (int i = 0; i < a3.size(); ++i) {
      const long n = to_long(a3.pairing(i, lam));
      if (n <= 0) continue;
      std::optional<Path> p = pi(lam);
      for (long k = 0; k < n; ++k) p = lower(a3, *p, i);
      REQUIRE(p);
      CHECK(*p == pi(a3.reflect(i, lam)));
      CHECK_FALSE(lower(a3, *p, i));
    }
}

TEST_CASE("a lowered non-linear path against a hand computation") {
  // π_{ϖ_1} * π_{ϖ_1} in A_1 is π_{2ϖ_1}; h^1 = -2τ peaks at τ = 0 and
  // reaches -1 at τ = 1/2, so f_1 reflects the first half.
  const Path p = concat({pi(w1()), pi(w1())});
  const auto q = lower(a1(), p, 1);
  REQUIRE(q);
  CHECK(*q == Path({{w1() * Rational(-2), ratio(1, 2)}, {w1() * Rational(2), ratio(1, 2)}}));
  CHECK(q->endpoint().is_zero());
}

TEST_CASE("weyl action") {
  CHECK(weyl_act(a1(), pi(w1()), 1) == pi(-w1()));
  const Path p = concat({pi(w1()), pi(-w1())});
  CHECK(weyl_act(a1(), weyl_act(a1(), p, 0), 0) == p);
  const Path zero = Path::constant(2, Ambient::Classical);
  CHECK(weyl_act(a1(), zero, 1) == zero);
}

TEST_CASE("concatenation") {
  const Path p = concat({pi(w1()), pi(-w1())});
  CHECK(p.segments().size() == 2);
  CHECK(p.endpoint().is_zero());
  CHECK(p.at(ratio(1, 2)) == w1());
  const Weight lam = a2().classical_fundamental(1) + a2().classical_fundamental(2);
  CHECK(concat({pi(lam), pi(lam)}) == stretch(pi(lam), 2));
  CHECK(concat({p, Path::constant(2, Ambient::Classical)}) == p);
}

TEST_CASE("stretching") {
  CHECK(stretch(pi(w1()), 3) == pi(w1() * Rational(3)));
  const Path p = concat({pi(w1()), pi(-w1())});
  CHECK(stretch(p, 1) == p);
  CHECK_THROWS_AS(stretch(p, 0), std::invalid_argument);
}

TEST_CASE("classical projection of affine paths") {
  const auto& cd = a1();
  const Weight lam = Rational(2) * cd.classical_fundamental(1, Ambient::Affine) + Rational(3) * cd.delta();
  CHECK(project(pi(lam)) == pi(w1() * Rational(2)));
  CHECK_THROWS_AS(project(pi(w1())), AmbientMismatch);
}

TEST_CASE("uniform segmentation") {
  CHECK(segment_uniform(pi(w1()), 2) == std::vector<Weight>{w1(), w1()});
  const Path p({{w1(), ratio(1, 2)}, {-w1(), ratio(1, 2)}});
  CHECK(segment_uniform(p, 2) == std::vector<Weight>{w1(), -w1()});
  CHECK(from_uniform(segment_uniform(p, 6)) == p);
  CHECK_THROWS_AS(segment_uniform(p, 3), GridViolation);
}

TEST_CASE("non-integral extrema are reported") {
  const Path p({{-w1(), ratio(1, 2)}, {w1() * Rational(3), ratio(1, 2)}});
  CHECK_THROWS_AS(epsilon(a1(), p, 1), IntegralityViolation);
}

TEST_CASE("mixing ambients is rejected") {
  const Weight aff = a1().classical_fundamental(1, Ambient::Affine);
  CHECK_THROWS_AS(concat({pi(w1()), pi(aff)}), AmbientMismatch);
}
