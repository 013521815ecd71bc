#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "loom/errors.hpp"
#include "loom/qfunc.hpp"

using namespace loom;

namespace {

QScalar laurent(std::initializer_list<std::pair<long, long>> terms) {
  QScalar s;
  for (auto [k, c] : terms) s += QScalar(c) * QScalar::q_pow(k);
  return s;
}

}  // namespace

TEST_CASE("quantum integers") {
  CHECK(qint(2) == laurent({{1, 1}, {-1, 1}}));
  CHECK(qint(0) == QScalar(0));
  CHECK(qfact(0) == QScalar(1));
  for (long m = 1; m <= 7; ++m) {
    QScalar expect;
    for (long k = 0; k < m; ++k) expect += QScalar::q_pow(m - 1 - 2 * k);
    CHECK(qint(m) == expect);
  }
}

TEST_CASE("q-binomials") {
  CHECK(qbinom(4, 2) == laurent({{-4, 1}, {-2, 1}, {0, 2}, {2, 1}, {4, 1}}));
  for (long m = 0; m <= 8; ++m)
    for (long n = 0; n <= m; ++n) {
      const QScalar b = qbinom(m, n);
      CHECK(b.is_laurent());
      CHECK(b.bar() == b);
      CHECK(b == qfact(m) / (qfact(n) * qfact(m - n)));
    }
  // Pascal rule [m, n] = q^{-n}[m-1, n] + q^{m-n}[m-1, n-1].
  for (long m = 1; m <= 8; ++m)
    for (long n = 1; n < m; ++n)
      CHECK(qbinom(m, n) == QScalar::q_pow(-n) * qbinom(m - 1, n) + QScalar::q_pow(m - n) * qbinom(m - 1, n - 1));
}

TEST_CASE("valuations and the q -> 0 limit") {
  const QScalar q = QScalar::q_pow(1);
  CHECK(q.valuation() == 1);
  CHECK(QScalar::q_pow(-2).valuation() == -2);
  CHECK(QScalar(0).valuation() == QScalar::kInfiniteValuation);
  CHECK(q.bar() == QScalar::q_pow(-1));
  const QScalar x = (QScalar(3) + q) / (QScalar(1) - q * q);
  CHECK(x.in_A());
  CHECK(x.at_zero() == 3);
  CHECK(q.at_zero() == 0);
  CHECK_THROWS_AS(QScalar::q_pow(-1).at_zero(), NotInLattice);
  CHECK_FALSE(x.is_laurent());
  CHECK(qint(3).valuation() == -2);
}

TEST_CASE("field arithmetic is exact and reduced") {
  const QScalar q = QScalar::q_pow(1);
  const QScalar a = (q + QScalar(1)) / (q - QScalar(1));
  CHECK(a * ((q - QScalar(1)) / (q + QScalar(1))) == QScalar(1));
  const QScalar b = (q * q - QScalar(1)) / (q - QScalar(1));
  CHECK(b == q + QScalar(1));
  CHECK(b.den() == QPoly(1));
  CHECK(QScalar(ratio(1, 3)) * QScalar(3) == QScalar(1));
}

TEST_CASE("polynomial division and gcd") {
  const QPoly x = QPoly::monomial(1);
  const QPoly a = (x - QPoly(1)) * (x + QPoly(2)), b = (x - QPoly(1)) * (x - QPoly(3));
  CHECK(QPoly::gcd(a, b) == x - QPoly(1));
  auto [quot, rem] = QPoly::divmod(a, x - QPoly(1));
  CHECK(quot == x + QPoly(2));
  CHECK(rem.is_zero());
  CHECK(QPoly::monomial(3, 2).shifted(-1) == QPoly::monomial(2, 2));
  CHECK(QPoly({1, 2, 3}).reversed() == QPoly({3, 2, 1}));
}
