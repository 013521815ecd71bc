#pragma once

#include <limits>
#include <string>
#include <vector>

#include "loom/rational.hpp"

namespace loom {

/// Polynomial in q with rational coefficients, lowest degree first, no
/// trailing zeros (the zero polynomial has no coefficients).
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  QPoly(long c);
  static QPoly monomial(long degree, const Rational& c = 1);

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// −1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  /// Order of vanishing at q = 0; zero polynomial throws.
  long order() const;
  const Rational& leading() const { return c_.back(); }
  Rational coeff(long k) const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly operator-() const;
  QPoly scaled(const Rational& c) const;
  /// Multiplies by q^k, k ≥ 0, or divides by q^{-k} when q^{-k} divides.
  QPoly shifted(long k) const;
  /// Coefficients reversed: q^{deg} p(q^{-1}).
  QPoly reversed() const;

  /// Euclidean division a = quotient·b + remainder.
  static std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
  /// Monic greatest common divisor (zero if both are zero).
  static QPoly gcd(QPoly a, QPoly b);

  friend bool operator==(const QPoly&, const QPoly&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Element of Q(q): num/den with den monic and gcd(num, den) = 1.
class QScalar {
 public:
  QScalar() : num_(0), den_(1) {}
  QScalar(long c) : num_(c), den_(1) {}
  QScalar(const Rational& c);
  QScalar(QPoly num, QPoly den);
  /// q^k for any integer k.
  static QScalar q_pow(long k);

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// ord_{q=0}; the zero element reports kInfiniteValuation.
  static constexpr long kInfiniteValuation = std::numeric_limits<long>::max();
  long valuation() const;
  /// Regular at q = 0, i.e. an element of the ring 𝒜.
  bool in_A() const { return valuation() >= 0; }
  /// Value at q = 0; throws NotInLattice when the element has a pole there.
  Rational at_zero() const;
  /// Denominator is a power of q.
  bool is_laurent() const;
  /// Image under q ↦ q^{-1}.
  QScalar bar() const;

  QScalar& operator+=(const QScalar& o);
  QScalar& operator-=(const QScalar& o);
  QScalar& operator*=(const QScalar& o);
  QScalar& operator/=(const QScalar& o);
  friend QScalar operator+(QScalar a, const QScalar& b) { return a += b; }
  friend QScalar operator-(QScalar a, const QScalar& b) { return a -= b; }
  friend QScalar operator*(QScalar a, const QScalar& b) { return a *= b; }
  friend QScalar operator/(QScalar a, const QScalar& b) { return a /= b; }
  QScalar operator-() const { return QScalar(-num_, den_); }

  friend bool operator==(const QScalar&, const QScalar&) = default;

  std::string to_string() const;

 private:
  void normalize();
  QPoly num_;
  QPoly den_;
};

/// [m]_q = (q^m − q^{-m})/(q − q^{-1}).
QScalar qint(long m);
/// [m]_q! = [1]_q ... [m]_q.
QScalar qfact(long m);
/// [m choose n]_q = [m]_q! / ([n]_q! [m−n]_q!); zero when n > m.
QScalar qbinom(long m, long n);

}  // namespace loom
