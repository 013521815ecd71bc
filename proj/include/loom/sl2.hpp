#pragma once

#include <map>
#include <optional>
#include <vector>

#include "loom/crystal.hpp"
#include "loom/qfunc.hpp"
#include "loom/report.hpp"

namespace loom::sl2 {

/// (s_1, ..., s_k) stands for F^{(s_1)}v_1 ⊗ ... ⊗ F^{(s_k)}v_k.
using Index = std::vector<int>;
/// (t_1, ..., t_k): the factors are V(t_1), ..., V(t_k).
using Shape = std::vector<int>;

class TensorVector {
 public:
  explicit TensorVector(Shape shape);
  static TensorVector basis(const Shape& shape, const Index& index);

  const Shape& shape() const { return shape_; }
  const std::map<Index, QScalar>& coords() const { return coords_; }
  QScalar coord(const Index& index) const;
  bool is_zero() const { return coords_.empty(); }

  void add(const Index& index, const QScalar& c);
  TensorVector& operator+=(const TensorVector& o);
  TensorVector& operator-=(const TensorVector& o);
  TensorVector& operator*=(const QScalar& c);
  friend TensorVector operator+(TensorVector a, const TensorVector& b) { return a += b; }
  friend TensorVector operator-(TensorVector a, const TensorVector& b) { return a -= b; }
  friend TensorVector operator*(const QScalar& c, TensorVector v) { return v *= c; }
  friend bool operator==(const TensorVector&, const TensorVector&) = default;

  /// Σ (t_j − 2 s_j).
  long weight_of(const Index& index) const;
  /// Common weight of all terms; throws std::invalid_argument when mixed
  /// and returns nullopt for the zero vector.
  std::optional<long> weight() const;

  /// Least valuation over all coordinates (infinite for zero).
  long min_valuation() const;
  /// Coordinates at q = 0; throws NotInLattice on a negative valuation.
  std::map<Index, Rational> at_zero() const;

  /// Every index of the shape with the given weight, in lexicographic order.
  std::vector<Index> weight_space(long weight) const;
  std::vector<Index> all_indices() const;

  std::string to_string() const;

 private:
  Shape shape_;
  std::map<Index, QScalar> coords_;
};

enum class Gen { E, F, K };

/// E^{(n)}, F^{(n)} or K^n.
struct Atom {
  Gen gen;
  long n;
  friend bool operator==(const Atom&, const Atom&) = default;
};

inline Atom E(long r = 1) { return {Gen::E, r}; }
inline Atom F(long r = 1) { return {Gen::F, r}; }
inline Atom K(long p = 1) { return {Gen::K, p}; }

/// Product X_1 X_2 ... X_k; acts on a vector as X_1(X_2(...(X_k v))).
using Monomial = std::vector<Atom>;

/// Bracketing of the tensor factors used to iterate the coproduct.
struct Bracketing {
  int leaf = -1;
  std::vector<Bracketing> kids;

  static Bracketing left_comb(int k);
  static Bracketing right_comb(int k);
  int first() const;
  int last() const;
};

/// Δ of a monomial as Σ coefficient · (left ⊗ right):
///   Δ(E^{(r)}) = Σ_s q^{-s(r-s)} E^{(s)} ⊗ E^{(r-s)} K^{-s},
///   Δ(F^{(r)}) = Σ_s q^{-s(r-s)} F^{(r-s)} K^s ⊗ F^{(s)},
///   Δ(K^p) = K^p ⊗ K^p.
struct CoproductTerm {
  QScalar coeff;
  Monomial left;
  Monomial right;
};
std::vector<CoproductTerm> coproduct(const Monomial& m);

TensorVector act(const Monomial& m, const TensorVector& v, const Bracketing& tree);
/// Uses the left comb ((V_1 ⊗ V_2) ⊗ V_3) ⊗ ...
TensorVector act(const Monomial& m, const TensorVector& v);
inline TensorVector act(Atom a, const TensorVector& v) { return act(Monomial{a}, v); }

/// v = Σ_s F^{(s)} u_s with E u_s = 0; pairs (s, u_s) with u_s ≠ 0, s ascending.
std::vector<std::pair<int, TensorVector>> string_decompose(const TensorVector& v);
/// ẽ v = Σ F^{(s-1)} u_s and f̃ v = Σ F^{(s+1)} u_s.
TensorVector kashiwara_e(const TensorVector& v);
TensorVector kashiwara_f(const TensorVector& v);

/// c_{r,a} for V(t1) ⊗ V(t2), from the closed product formula.
QScalar singular_coefficient(int t1, int t2, int r, int a);
/// u_r = Σ_a c_{r,a} F^{(a)}v_1 ⊗ F^{(r-a)}v_2, 0 ≤ r ≤ min(t1, t2).
std::vector<TensorVector> singular_vectors(int t1, int t2);
/// Kernel of E on the weight t1 + t2 − 2r space, solved by elimination and
/// scaled so the coordinate of v_1 ⊗ F^{(r)}v_2 is 1. Empty unless the
/// kernel is one-dimensional.
std::optional<TensorVector> kernel_vector(int t1, int t2, int r);

/// The basis {F^{(b)} u_r} of V(t1) ⊗ V(t2), with the change of basis to
/// tensor coordinates inverted once per weight space.
class StringBasis {
 public:
  StringBasis(int t1, int t2);

  const Shape& shape() const { return shape_; }
  const std::vector<TensorVector>& singular() const { return us_; }
  /// F^{(b)} u_r in tensor coordinates (zero when b is past the string end).
  const TensorVector& element(int r, int b) const;
  /// Coordinates of v keyed by (r, b); v must be weight-homogeneous.
  std::map<std::pair<int, int>, QScalar> coordinates(const TensorVector& v) const;
  TensorVector from_coordinates(const std::map<std::pair<int, int>, QScalar>& c) const;

  /// Every element F^{(b)} u_r has coordinates in 𝒜 and each weight block
  /// of the change of basis has a unit determinant; failures per weight.
  std::vector<std::string> span_defects() const;

 private:
  struct Block {
    std::vector<Index> basis;                 // tensor basis of the weight space
    std::vector<std::pair<int, int>> labels;  // (r, b) of each string element
    std::vector<std::vector<QScalar>> inverse;
    QScalar det;
    bool entries_in_A = true;
  };
  Shape shape_;
  std::vector<TensorVector> us_;
  std::vector<std::vector<TensorVector>> strings_;
  std::map<long, Block> blocks_;
};

/// Coordinates of v in the string basis, keyed by (r, b).
std::map<std::pair<int, int>, QScalar> string_coordinates(const TensorVector& v);

/// One row of the crystal limit: ẽ/f̃ of a basis vector modulo q𝓛, as the
/// basis vector it reduces to (nullopt for 0).
struct LimitRow {
  Index source;
  std::optional<Index> e_exact, f_exact;
  std::optional<Index> e_lemma, f_lemma;
  std::optional<Index> e_rule, f_rule;
  bool e_basis_like = true, f_basis_like = true;
  bool lattice = true;
};

std::vector<LimitRow> crystal_limit_table(int t1, int t2);

/// B(t): the crystal of V(t) on one label, nodes ordered by s.
CrystalGraph crystal_of(int t);

/// Checks for one shape (t1, t2): singular vectors, closed form, lattice
/// span and preservation, and the crystal limit table.
Report verify_lemma(int t1, int t2);
/// Defining relations on every basis vector of the shape.
Report verify_relations(const Shape& shape);
/// Both bracketings give the same action of E^{(r)}, F^{(r)}, K^{±1}.
Report verify_coassociativity(const Shape& shape, int max_power = 2);
/// Bar symmetry and Laurent property of [m choose n]_q for n ≤ m ≤ max_m.
Report verify_qbinom(int max_m);

}  // namespace loom::sl2
