#include "loom/weight.hpp"

#include <stdexcept>

#include "loom/errors.hpp"

namespace loom {

std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational r;
  if (r.set_str(s, 10) != 0 || r.get_den() == 0)
    throw std::invalid_argument("malformed rational literal '" + s + "'");
  r.canonicalize();
  return r;
}

long to_long(const Rational& r) {
  if (!is_integer(r) || !r.get_num().fits_slong_p())
    throw std::domain_error("rational " + to_string(r) + " is not a machine integer");
  return r.get_num().get_si();
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

std::string to_string(Ambient a) {
  return a == Ambient::Affine ? "affine" : "classical";
}

Weight::Weight(std::vector<Rational> lambda, std::optional<Rational> delta)
    : lambda_(std::move(lambda)), delta_(std::move(delta)) {
  for (auto& c : lambda_) c.canonicalize();
  if (delta_) delta_->canonicalize();
}

Weight Weight::zero(std::size_t size, Ambient ambient) {
  return Weight(std::vector<Rational>(size),
                ambient == Ambient::Affine ? std::optional<Rational>(0)
                                           : std::nullopt);
}

bool Weight::is_zero() const {
  for (const auto& c : lambda_)
    if (c != 0) return false;
  return !delta_ || *delta_ == 0;
}

bool Weight::is_integral() const {
  for (const auto& c : lambda_)
    if (!is_integer(c)) return false;
  return !delta_ || is_integer(*delta_);
}

void Weight::require_same_ambient(const Weight& other) const {
  if (ambient() != other.ambient())
    throw AmbientMismatch("cannot combine " + to_string(ambient()) +
                          " weight " + key() + " with " +
                          to_string(other.ambient()) + " weight " +
                          other.key());
  if (size() != other.size())
    throw std::invalid_argument("weights of different rank: " + key() +
                                " vs " + other.key());
}

Weight& Weight::operator+=(const Weight& other) {
  require_same_ambient(other);
  for (std::size_t i = 0; i < lambda_.size(); ++i) lambda_[i] += other.lambda_[i];
  if (delta_) *delta_ += *other.delta_;
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  require_same_ambient(other);
  for (std::size_t i = 0; i < lambda_.size(); ++i) lambda_[i] -= other.lambda_[i];
  if (delta_) *delta_ -= *other.delta_;
  return *this;
}

Weight& Weight::operator*=(const Rational& c) {
  for (auto& x : lambda_) x *= c;
  if (delta_) *delta_ *= c;
  return *this;
}

Weight Weight::operator-() const {
  Weight w = *this;
  w *= Rational(-1);
  return w;
}

Weight Weight::classical() const { return Weight(lambda_, std::nullopt); }

Weight Weight::with_delta(const Rational& d) const { return Weight(lambda_, d); }

std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
  if (a.ambient() != b.ambient())
    return a.ambient() == Ambient::Classical ? std::strong_ordering::less
                                             : std::strong_ordering::greater;
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a.lambda_[i], b.lambda_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (a.delta_) {
    int c = cmp(*a.delta_, *b.delta_);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string Weight::key() const {
  std::string out = "(";
  for (std::size_t i = 0; i < lambda_.size(); ++i) {
    if (i) out += ',';
    out += to_string(lambda_[i]);
  }
  if (delta_) out += "|" + to_string(*delta_);
  out += ')';
  return out;
}

std::vector<std::string> Weight::coordinate_strings() const {
  std::vector<std::string> out;
  out.reserve(lambda_.size() + 1);
  for (const auto& c : lambda_) out.push_back(to_string(c));
  if (delta_) out.push_back(to_string(*delta_));
  return out;
}

}  // namespace loom
