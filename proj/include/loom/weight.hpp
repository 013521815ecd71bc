#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "loom/rational.hpp"

namespace loom {

/// Classical weights live in P = P^/Zδ and carry no δ-coordinate.
enum class Ambient { Classical, Affine };

std::string to_string(Ambient a);

/// A rational weight written in the basis {Λ_0, ..., Λ_ℓ, δ}.
///
/// The coordinate at Λ_i is the pairing with the simple coroot α_i^∨, so
/// pairings are plain reads. The δ-coordinate is present exactly when the
/// weight lives in the affine ambient; arithmetic between the two ambients
/// throws AmbientMismatch instead of silently dropping δ.
class Weight {
 public:
  Weight() = default;
  Weight(std::vector<Rational> lambda, std::optional<Rational> delta);

  static Weight zero(std::size_t size, Ambient ambient);

  std::size_t size() const { return lambda_.size(); }
  Ambient ambient() const {
    return delta_ ? Ambient::Affine : Ambient::Classical;
  }
  const Rational& operator[](std::size_t i) const { return lambda_[i]; }
  const std::vector<Rational>& lambda() const { return lambda_; }
  const std::optional<Rational>& delta() const { return delta_; }

  /// δ-coordinate, or zero for classical weights.
  Rational delta_or_zero() const { return delta_ ? *delta_ : Rational(0); }

  bool is_zero() const;
  bool is_integral() const;

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  Weight& operator*=(const Rational& c);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(Weight a, const Rational& c) { return a *= c; }
  friend Weight operator*(const Rational& c, Weight a) { return a *= c; }
  Weight operator-() const;

  /// Same coordinates with the δ-coordinate dropped.
  Weight classical() const;
  /// Lift to the affine ambient with the given δ-coordinate.
  Weight with_delta(const Rational& d) const;

  friend bool operator==(const Weight& a, const Weight& b) = default;
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b);

  /// "(c_0,...,c_ℓ)" or "(c_0,...,c_ℓ|d)" with canonical rationals.
  std::string key() const;
  /// Coordinates as canonical strings, δ last when present.
  std::vector<std::string> coordinate_strings() const;

 private:
  void require_same_ambient(const Weight& other) const;

  std::vector<Rational> lambda_;
  std::optional<Rational> delta_;
};

}  // namespace loom
