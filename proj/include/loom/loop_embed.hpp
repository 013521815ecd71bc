#pragma once

#include "loom/energy.hpp"
#include "loom/report.hpp"

namespace loom {

using AffineTensorKind = AffinizedKind<TensorKind>;
using AffineElement = AffineTensorKind::Element;

struct PsiImage {
  Path path;
  /// λ̂_0, ..., λ̂_{Nm} before the path canonicalises collinear pieces.
  std::vector<Weight> turning_points;
  std::vector<Rational> kappas;
};

/// B(ϖ_i)^{⊗m} ⊗ Z[t, t^{-1}] together with ψ into the affine path space.
///
/// Holds pointers into itself, so it is neither copyable nor movable.
class LoopEmbedding {
 public:
  LoopEmbedding(const CartanData& cd, int i, int m, Execution execution = Execution::Parallel);
  LoopEmbedding(const LoopEmbedding&) = delete;
  LoopEmbedding& operator=(const LoopEmbedding&) = delete;

  const CartanData& cartan() const { return cd_; }
  int index() const { return i_; }
  int power() const { return m_; }
  long N() const { return table_.N; }
  long L() const { return table_.N * m_; }

  const PathKind& path_kind() const { return kind_; }
  const Realized<PathKind>& fundamental() const { return b_; }
  const EnergyTable& energy() const { return table_; }
  const TensorKind& tensor() const { return tensor_; }
  const AffineTensorKind& affinized() const { return affine_; }

  /// T_N(b) as node indices of B(ϖ_i).
  std::vector<std::size_t> refined(const TensorKind::Element& b) const;
  /// Maj_χ(T_N(b)).
  long maj_of(const TensorKind::Element& b) const;
  /// κ_j(b ⊗ t^n), 0 ≤ j ≤ Nm.
  Rational kappa(const TensorKind::Element& b, long n, long j) const;
  PsiImage psi(const AffineElement& x) const;
  /// (Maj_χ(T_N(b))/N + n) mod m.
  long c_class(const AffineElement& x) const;

  /// All b ⊗ t^n with |n| ≤ window, ordered by tensor element then degree.
  std::vector<AffineElement> window_elements(long window) const;
  /// ψ of every element; the parallel kernel and its serial reference.
  std::vector<PsiImage> psi_all(const std::vector<AffineElement>& xs,
                                Execution execution = Execution::Parallel) const;
  /// π_{mϖ_i + nδ}.
  Path highest_path(long n) const;

 private:
  CartanData cd_;
  int i_;
  int m_;
  PathKind kind_;
  Realized<PathKind> b_;
  EnergyTable table_;
  TensorKind tensor_;
  AffineTensorKind affine_;
};

/// κ_j computed from a refined word of length L = Nm.
Rational kappa(const std::vector<std::size_t>& word, long n, long j, const EnergyTable& table);

/// Desk-scale check that ψ maps the windowed affinized tensor crystal onto the
/// union of the windowed B(mϖ_i + nδ), 0 ≤ n < m, class by class.
Report verify_decomposition(const CartanData& cd, int i, int m, long window,
                            Execution execution = Execution::Parallel,
                            std::size_t node_cap = kDefaultNodeCap);

}  // namespace loom
