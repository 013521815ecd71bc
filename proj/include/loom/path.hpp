#pragma once

#include <optional>
#include <string>
#include <vector>

#include "loom/cartan.hpp"
#include "loom/weight.hpp"

namespace loom {

struct Segment {
  Weight dir;
  Rational len;
  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Piecewise-linear path starting at 0, stored as (direction, duration)
/// pairs with durations summing to 1.
///
/// Construction canonicalizes: segments with zero direction are dropped (a
/// stalling reparametrisation), the remaining durations are rescaled
/// uniformly back to total 1, and consecutive equal directions are merged.
/// Two paths are equal iff their canonical forms are. The endpoint must be
/// an integral weight.
class Path {
 public:
  /// The constant path at 0 (a single zero-direction segment).
  static Path constant(std::size_t size, Ambient ambient);
  /// π_λ : τ ↦ τλ; λ must be integral.
  static Path linear(const Weight& lambda);

  explicit Path(std::vector<Segment> segments);

  const std::vector<Segment>& segments() const { return segs_; }
  Ambient ambient() const { return segs_.front().dir.ambient(); }
  std::size_t weight_size() const { return segs_.front().dir.size(); }
  bool is_constant() const { return segs_.front().dir.is_zero(); }

  /// π(1).
  Weight endpoint() const;
  /// Cumulative times 0 = t_0 < t_1 < ... < t_K = 1.
  std::vector<Rational> breakpoints() const;
  /// π(t_k) for every breakpoint.
  std::vector<Weight> turning_points() const;
  Weight at(const Rational& tau) const;

  std::string key() const;

  friend bool operator==(const Path& a, const Path& b) { return a.segs_ == b.segs_; }

 private:
  Path() = default;
  std::vector<Segment> segs_;
};

/// Exact data of h^i_π(τ) = −⟨α_i^∨, π(τ)⟩.
struct HeightProfile {
  std::vector<Rational> times;   ///< breakpoints of π
  std::vector<Rational> values;  ///< h^i_π at those breakpoints
  Rational max;                  ///< global maximum of h^i_π on [0, 1]
};

HeightProfile height_profile(const CartanData& cd, const Path& p, int i);

/// Breakpoint data e^i_±, f^i_± of a path. The optional members are empty
/// exactly when the corresponding operator returns null.
struct Extrema {
  long epsilon = 0;  ///< ε_i(π), the integral maximum of h^i_π
  long phi = 0;      ///< φ_i(π) = ε_i(π) + ⟨α_i^∨, wt π⟩
  std::optional<Rational> e_minus, e_plus;
  std::optional<Rational> f_plus, f_minus;
};

/// Throws IntegralityViolation when the maximum of h^i_π is not an integer.
Extrema h_extrema(const CartanData& cd, const Path& p, int i);

long epsilon(const CartanData& cd, const Path& p, int i);
long phi(const CartanData& cd, const Path& p, int i);

/// Root operator e_i; empty iff ε_i(π) = 0.
std::optional<Path> raise(const CartanData& cd, const Path& p, int i);
/// Root operator f_i; empty iff the last maximum of h^i_π is at τ = 1.
std::optional<Path> lower(const CartanData& cd, const Path& p, int i);

/// s_i π = f_i^n π for n = ⟨α_i^∨, π(1)⟩ ≥ 0, and e_i^{−n} π otherwise.
Path weyl_act(const CartanData& cd, const Path& p, int i);

/// π_1 ⊗ ... ⊗ π_k with equal time 1/k per operand.
Path concat(const std::vector<Path>& parts);

/// S_n : π ↦ nπ.
Path stretch(const Path& p, long n);

/// Ξ : applies ξ pointwise; the path must be affine.
Path project(const Path& p);

/// Directions ν_1..ν_N of π on the cells [(r−1)/N, r/N]. Throws
/// GridViolation when a breakpoint is off the 1/N grid.
std::vector<Weight> segment_uniform(const Path& p, long n);

/// π_ν for directions ν_1..ν_N at times j/N.
Path from_uniform(const std::vector<Weight>& directions);

}  // namespace loom
