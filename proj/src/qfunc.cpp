#include "loom/qfunc.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "loom/errors.hpp"

namespace loom {

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly::QPoly(long c) {
  if (c != 0) c_.push_back(Rational(c));
}

QPoly QPoly::monomial(long degree, const Rational& c) {
  if (degree < 0) throw std::invalid_argument("negative monomial degree");
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
  v.back() = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

long QPoly::order() const {
  if (is_zero()) throw std::domain_error("order of the zero polynomial");
  long k = 0;
  while (c_[k] == 0) ++k;
  return k;
}

Rational QPoly::coeff(long k) const {
  if (k < 0 || k > degree()) return 0;
  return c_[k];
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return QPoly(std::move(v));
}

QPoly QPoly::operator-() const { return scaled(-1); }

QPoly QPoly::scaled(const Rational& c) const {
  if (c == 0) return QPoly();
  QPoly out = *this;
  for (auto& x : out.c_) x *= c;
  return out;
}

QPoly QPoly::shifted(long k) const {
  if (is_zero() || k == 0) return *this;
  if (k > 0) {
    std::vector<Rational> v(static_cast<std::size_t>(k), Rational(0));
    v.insert(v.end(), c_.begin(), c_.end());
    return QPoly(std::move(v));
  }
  if (order() < -k) throw std::domain_error("q-power does not divide the polynomial");
  return QPoly(std::vector<Rational>(c_.begin() - k, c_.end()));
}

QPoly QPoly::reversed() const { return QPoly(std::vector<Rational>(c_.rbegin(), c_.rend())); }

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {QPoly(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1), Rational(0));
  std::vector<Rational> rem = a.c_;
  const Rational lead = b.leading();
  for (long k = a.degree(); k >= b.degree(); --k) {
    const Rational c = rem[k] / lead;
    if (c == 0) continue;
    quot[k - b.degree()] = c;
    for (long j = 0; j <= b.degree(); ++j) rem[k - b.degree() + j] -= c * b.c_[j];
  }
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(Rational(1) / a.leading());
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (long k = 0; k <= degree(); ++k) {
    const Rational& c = c_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    const bool unit = mag == 1 && k > 0;
    if (!unit) out += mag.get_str();
    if (k > 0) {
      if (!unit) out += "*";
      out += "q";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

QScalar::QScalar(const Rational& c) : num_(std::vector<Rational>{c}), den_(1) {}

QScalar::QScalar(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator in Q(q)");
  normalize();
}

QScalar QScalar::q_pow(long k) {
  QScalar s;
  if (k >= 0) {
    s.num_ = QPoly::monomial(k);
    s.den_ = QPoly(1);
  } else {
    s.num_ = QPoly(1);
    s.den_ = QPoly::monomial(-k);
  }
  return s;
}

void QScalar::normalize() {
  if (num_.is_zero()) {
    den_ = QPoly(1);
    return;
  }
  const long k = std::min(num_.order(), den_.order());
  if (k > 0) {
    num_ = num_.shifted(-k);
    den_ = den_.shifted(-k);
  }
  const bool monomial_den = den_.degree() == den_.order();
  const bool monomial_num = num_.degree() == num_.order();
  if (den_.degree() > 0 && !monomial_den && !monomial_num) {
    QPoly g = QPoly::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = QPoly::divmod(num_, g).first;
      den_ = QPoly::divmod(den_, g).first;
    }
  }
  if (den_.leading() != 1) {
    const Rational inv = Rational(1) / den_.leading();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

long QScalar::valuation() const {
  if (is_zero()) return kInfiniteValuation;
  return num_.order() - den_.order();
}

Rational QScalar::at_zero() const {
  const long v = valuation();
  if (v < 0) throw NotInLattice("element " + to_string() + " has a pole at q = 0");
  if (v > 0) return 0;
  return num_.coeff(num_.order()) / den_.coeff(den_.order());
}

bool QScalar::is_laurent() const {
  return den_.degree() == den_.order();
}

QScalar QScalar::bar() const {
  if (is_zero()) return *this;
  // p(q^{-1}) = q^{-deg p} rev(p)
  QPoly n = num_.reversed().shifted(den_.degree());
  QPoly d = den_.reversed().shifted(num_.degree());
  return QScalar(std::move(n), std::move(d));
}

QScalar& QScalar::operator+=(const QScalar& o) {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

QScalar& QScalar::operator-=(const QScalar& o) { return *this += -o; }

QScalar& QScalar::operator*=(const QScalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = QScalar();
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

QScalar& QScalar::operator/=(const QScalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero in Q(q)");
  if (is_zero()) return *this;
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  normalize();
  return *this;
}

std::string QScalar::to_string() const {
  if (den_ == QPoly(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

QScalar qint(long m) {
  if (m < 0) throw std::invalid_argument("q-integer of a negative argument");
  const QScalar numer = QScalar::q_pow(m) - QScalar::q_pow(-m);
  const QScalar denom = QScalar::q_pow(1) - QScalar::q_pow(-1);
  return numer / denom;
}

QScalar qfact(long m) {
  if (m < 0) throw std::invalid_argument("q-factorial of a negative argument");
  QScalar out(1);
  for (long k = 1; k <= m; ++k) out *= qint(k);
  return out;
}

QScalar qbinom(long m, long n) {
  if (m < 0 || n < 0) throw std::invalid_argument("q-binomial of a negative argument");
  if (n > m) return QScalar();
  static std::mutex mu;
  static std::map<std::pair<long, long>, QScalar> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = memo.find({m, n}); it != memo.end()) return it->second;
  }
  QScalar value = qfact(m) / (qfact(n) * qfact(m - n));
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(std::make_pair(m, n), value);
  return value;
}

}  // namespace loom
