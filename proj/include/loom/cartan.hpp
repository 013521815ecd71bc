#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "loom/weight.hpp"

namespace loom {

using IntMatrix = std::vector<std::vector<int>>;

/// Cartan data of an untwisted affine type, indexed by Î = {0, ..., ℓ}.
///
/// matrix()[i][j] = a_ij = ⟨α_i^∨, α_j⟩. Node 0 is attached through the
/// highest root θ of the finite part; marks and comarks are recovered as the
/// primitive positive null vectors of the matrix (A·marks = 0,
/// comarks·A = 0) rather than read from tables.
class CartanData {
 public:
  /// Accepts A/B/C/D with a rank, and E6/E7/E8/F4/G2 (or E/F/G plus the
  /// matching rank). Throws InvalidCartanType naming the violated constraint.
  static CartanData build(std::string_view type_label, int rank);

  const std::string& type_label() const { return type_; }
  int rank() const { return rank_; }
  /// |Î| = ℓ + 1.
  int size() const { return rank_ + 1; }

  const IntMatrix& matrix() const { return matrix_; }
  int entry(int i, int j) const { return matrix_[i][j]; }
  const std::vector<int>& marks() const { return marks_; }
  const std::vector<int>& comarks() const { return comarks_; }
  const std::vector<int>& symmetrizers() const { return symmetrizers_; }

  /// Highest root of the finite part, as coefficients of α_1..α_ℓ.
  const std::vector<int>& highest_root() const { return theta_; }

  Rational pairing(int coroot, const Weight& w) const;
  /// ⟨∂, w⟩ = coefficient of Λ_0 plus δ-coordinate; affine weights only.
  Rational pairing_d(const Weight& w) const;
  /// ⟨c, w⟩ = Σ a_i^∨ · w[i].
  Rational level(const Weight& w) const;

  /// α_j expanded in {Λ_i, δ}: coordinate i is a_ij, δ-coordinate δ_{j,0}.
  Weight simple_root(int j, Ambient ambient) const;
  Weight reflect(int i, const Weight& w) const;
  /// ξ : P^ -> P^/Zδ.
  Weight classical_project(const Weight& w) const;

  /// Λ_i.
  Weight fundamental(int i, Ambient ambient) const;
  /// ϖ_i = Λ_i − a_i^∨ Λ_0, a level-zero weight; 1 ≤ i ≤ ℓ.
  Weight classical_fundamental(int i, Ambient ambient = Ambient::Classical) const;
  /// δ in the affine ambient.
  Weight delta() const;
  Weight zero(Ambient ambient) const { return Weight::zero(size(), ambient); }

  /// Builds a weight, checking the coordinate count.
  Weight weight(std::vector<Rational> lambda,
                std::optional<Rational> delta = std::nullopt) const;

  /// Positive coroots of the finite part, as coefficients of α_1^∨..α_ℓ^∨.
  std::vector<std::vector<int>> finite_positive_coroots() const;

 private:
  void check_index(int i) const;
  void check_weight(const Weight& w) const;

  std::string type_;
  int rank_ = 0;
  IntMatrix matrix_;
  std::vector<int> marks_;
  std::vector<int> comarks_;
  std::vector<int> symmetrizers_;
  std::vector<int> theta_;
};

/// Finite Cartan matrix (Bourbaki numbering, a_ij = ⟨α_i^∨, α_j⟩), 0-based.
IntMatrix finite_cartan_matrix(std::string_view canonical_type, int rank);

}  // namespace loom
