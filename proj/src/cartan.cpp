#include "loom/cartan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

#include "loom/errors.hpp"

namespace loom {

namespace {

struct TypeSpec {
  std::string label;
  int rank;
};

TypeSpec canonical_type(std::string_view label, int rank) {
  std::string t(label);
  for (auto& c : t) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  auto fail = [&](const std::string& why) -> TypeSpec {
    throw InvalidCartanType("invalid affine type " + std::string(label) + " rank " +
                            std::to_string(rank) + ": " + why);
  };
  if (t == "A") {
    if (rank < 1) fail("type A requires rank >= 1");
    return {t, rank};
  }
  if (t == "B" || t == "C") {
    if (rank < 2) fail("type " + t + " requires rank >= 2");
    return {t, rank};
  }
  if (t == "D") {
    if (rank < 4) fail("type D requires rank >= 4");
    return {t, rank};
  }
  static const std::map<std::string, int> exceptional = {
      {"E6", 6}, {"E7", 7}, {"E8", 8}, {"F4", 4}, {"G2", 2}};
  if (auto it = exceptional.find(t); it != exceptional.end()) {
    if (rank != it->second) fail("type " + t + " requires rank " + std::to_string(it->second));
    return {t, rank};
  }
  if (t == "E") {
    if (rank < 6 || rank > 8) fail("type E requires rank 6, 7 or 8");
    return {"E" + std::to_string(rank), rank};
  }
  if (t == "F") {
    if (rank != 4) fail("type F requires rank 4");
    return {"F4", 4};
  }
  if (t == "G") {
    if (rank != 2) fail("type G requires rank 2");
    return {"G2", 2};
  }
  return fail("unknown type label (expected A, B, C, D, E6, E7, E8, F4 or G2)");
}

void link(IntMatrix& a, int i, int j, int aij, int aji) {
  a[i][j] = aij;
  a[j][i] = aji;
}

// Symmetrizer of an indecomposable Cartan matrix, scaled to coprime
// positive integers.
std::vector<int> symmetrize(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<Rational> d(n, Rational(0));
  d[0] = 1;
  std::queue<std::size_t> todo;
  todo.push(0);
  while (!todo.empty()) {
    auto i = todo.front();
    todo.pop();
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || a[i][j] == 0 || d[j] != 0) continue;
      d[j] = d[i] * a[i][j] / a[j][i];
      todo.push(j);
    }
  }
  Integer den = 1;
  for (const auto& x : d) den = lcm(den, x.get_den());
  std::vector<Integer> scaled;
  Integer g = 0;
  for (const auto& x : d) {
    Integer v = x.get_num() * (den / x.get_den());
    scaled.push_back(v);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  std::vector<int> out;
  for (const auto& v : scaled) out.push_back(static_cast<int>(Integer(v / g).get_si()));
  return out;
}

// Primitive positive integer generator of the one-dimensional kernel of m.
std::vector<int> null_vector(const IntMatrix& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m[i][j];

  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  if (cols - r != 1)
    throw std::logic_error("affine Cartan matrix must have corank one");

  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;

  std::vector<Rational> v(cols, Rational(0));
  v[free_col] = 1;
  for (std::size_t k = 0; k < pivot_col.size(); ++k) v[pivot_col[k]] = -a[k][free_col];

  Integer den = 1;
  for (const auto& x : v) den = lcm(den, x.get_den());
  Integer g = 0;
  std::vector<Integer> iv;
  for (const auto& x : v) {
    iv.push_back(x.get_num() * (den / x.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), iv.back().get_mpz_t());
  }
  if (iv[0] < 0) g = -g;
  std::vector<int> out;
  for (const auto& x : iv) {
    Integer q = x / g;
    if (q <= 0) throw std::logic_error("null vector of an affine Cartan matrix is not positive");
    out.push_back(static_cast<int>(q.get_si()));
  }
  return out;
}

int coroot_pairing(const IntMatrix& a, int i, const std::vector<int>& beta) {
  int s = 0;
  for (std::size_t j = 0; j < beta.size(); ++j) s += a[i][j] * beta[j];
  return s;
}

}  // namespace

IntMatrix finite_cartan_matrix(std::string_view type, int rank) {
  const int n = rank;
  IntMatrix a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) link(a, i, i + 1, -1, -1);
  };
  if (type == "A") {
    chain(n);
  } else if (type == "B") {
    chain(n - 1);
    link(a, n - 2, n - 1, -1, -2);  // α_ℓ short
  } else if (type == "C") {
    chain(n - 1);
    link(a, n - 2, n - 1, -2, -1);  // α_ℓ long
  } else if (type == "D") {
    chain(n - 1);
    link(a, n - 3, n - 1, -1, -1);
  } else if (type[0] == 'E') {
    // Bourbaki: 1-3-4-5-6(-7(-8)), 2 attached to 4.
    link(a, 0, 2, -1, -1);
    link(a, 1, 3, -1, -1);
    for (int i = 2; i + 1 < n; ++i) link(a, i, i + 1, -1, -1);
  } else if (type == "F4") {
    link(a, 0, 1, -1, -1);
    link(a, 1, 2, -1, -2);  // α_1, α_2 long
    link(a, 2, 3, -1, -1);
  } else if (type == "G2") {
    link(a, 0, 1, -3, -1);  // α_1 short
  } else {
    throw InvalidCartanType("unknown finite type " + std::string(type));
  }
  return a;
}

CartanData CartanData::build(std::string_view type_label, int rank) {
  const TypeSpec ts = canonical_type(type_label, rank);
  const IntMatrix fin = finite_cartan_matrix(ts.label, ts.rank);
  const int n = ts.rank;
  const std::vector<int> dfin = symmetrize(fin);
  const int dmax = *std::max_element(dfin.begin(), dfin.end());

  // Highest root: raise a long simple root by reflections until dominant.
  std::vector<int> theta(n, 0);
  theta[std::max_element(dfin.begin(), dfin.end()) - dfin.begin()] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      int p = coroot_pairing(fin, i, theta);
      if (p < 0) {
        theta[i] -= p;
        changed = true;
      }
    }
  }

  IntMatrix a(n + 1, std::vector<int>(n + 1, 0));
  a[0][0] = 2;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i + 1][j + 1] = fin[i][j];
  for (int i = 0; i < n; ++i) a[i + 1][0] = -coroot_pairing(fin, i, theta);
  // ⟨θ^∨, α_j⟩ with θ^∨ = Σ θ_i (d_i / d_max) α_i^∨ for the long root θ.
  for (int j = 0; j < n; ++j) {
    int s = 0;
    for (int i = 0; i < n; ++i) s += theta[i] * dfin[i] * fin[i][j];
    a[0][j + 1] = -s / dmax;
  }

  CartanData out;
  out.type_ = ts.label;
  out.rank_ = ts.rank;
  out.matrix_ = a;
  out.theta_ = theta;
  out.symmetrizers_ = symmetrize(a);
  out.marks_ = null_vector(a);
  IntMatrix at(n + 1, std::vector<int>(n + 1));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) at[i][j] = a[j][i];
  out.comarks_ = null_vector(at);
  return out;
}

void CartanData::check_index(int i) const {
  if (i < 0 || i > rank_)
    throw std::out_of_range("node index " + std::to_string(i) + " outside 0.." +
                            std::to_string(rank_));
}

void CartanData::check_weight(const Weight& w) const {
  if (static_cast<int>(w.size()) != size())
    throw std::invalid_argument("weight " + w.key() + " has wrong rank for type " + type_);
}

Weight CartanData::weight(std::vector<Rational> lambda, std::optional<Rational> delta) const {
  Weight w(std::move(lambda), std::move(delta));
  check_weight(w);
  return w;
}

Rational CartanData::pairing(int coroot, const Weight& w) const {
  check_index(coroot);
  check_weight(w);
  return w[coroot];
}

Rational CartanData::pairing_d(const Weight& w) const {
  check_weight(w);
  if (!w.delta()) throw AmbientMismatch("⟨∂, ·⟩ needs an affine weight, got " + w.key());
  return w[0] + *w.delta();
}

Rational CartanData::level(const Weight& w) const {
  check_weight(w);
  Rational s = 0;
  for (int i = 0; i < size(); ++i) s += comarks_[i] * w[i];
  return s;
}

Weight CartanData::simple_root(int j, Ambient ambient) const {
  check_index(j);
  std::vector<Rational> lam(size());
  for (int i = 0; i < size(); ++i) lam[i] = matrix_[i][j];
  std::optional<Rational> d;
  if (ambient == Ambient::Affine) d = Rational(j == 0 ? 1 : 0);
  return Weight(std::move(lam), d);
}

Weight CartanData::reflect(int i, const Weight& w) const {
  Rational p = pairing(i, w);
  if (p == 0) return w;
  return w - simple_root(i, w.ambient()) * p;
}

Weight CartanData::classical_project(const Weight& w) const {
  check_weight(w);
  if (!w.delta()) throw AmbientMismatch("weight " + w.key() + " is already classical");
  return w.classical();
}

Weight CartanData::fundamental(int i, Ambient ambient) const {
  check_index(i);
  Weight w = zero(ambient);
  std::vector<Rational> lam = w.lambda();
  lam[i] = 1;
  return Weight(std::move(lam), w.delta());
}

Weight CartanData::classical_fundamental(int i, Ambient ambient) const {
  if (i < 1 || i > rank_)
    throw std::out_of_range("classical fundamental weight index must lie in 1.." +
                            std::to_string(rank_));
  return fundamental(i, ambient) - fundamental(0, ambient) * Rational(comarks_[i]);
}

Weight CartanData::delta() const {
  return Weight(std::vector<Rational>(size()), Rational(1));
}

std::vector<std::vector<int>> CartanData::finite_positive_coroots() const {
  // Coroots of the finite part form the root system with transposed matrix.
  const int n = rank_;
  IntMatrix dual(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) dual[i][j] = matrix_[j + 1][i + 1];

  std::set<std::vector<int>> roots;
  std::vector<std::vector<int>> layer;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    roots.insert(e);
    layer.push_back(e);
  }
  while (!layer.empty()) {
    std::set<std::vector<int>> next;
    for (const auto& beta : layer) {
      for (int j = 0; j < n; ++j) {
        // α_j-string through β: β − pα_j, ..., β + qα_j with p − q = ⟨α_j^∨, β⟩.
        int p = 0;
        for (auto down = beta; down[j] > 0;) {
          --down[j];
          if (!roots.count(down)) break;
          ++p;
        }
        bool simple_j = std::count(beta.begin(), beta.end(), 0) == n - 1 && beta[j] == 1;
        if (simple_j) continue;
        int q = p - coroot_pairing(dual, j, beta);
        if (q > 0) {
          auto up = beta;
          ++up[j];
          if (!roots.count(up)) next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    roots.insert(next.begin(), next.end());
  }
  return {roots.begin(), roots.end()};
}

}  // namespace loom
