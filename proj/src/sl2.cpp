#include "loom/sl2.hpp"

#include <sstream>
#include <stdexcept>

#include "loom/errors.hpp"

namespace loom::sl2 {

// ---------------------------------------------------------------------------
// TensorVector

TensorVector::TensorVector(Shape shape) : shape_(std::move(shape)) {
  if (shape_.empty()) throw std::invalid_argument("tensor shape needs at least one factor");
  for (int t : shape_)
    if (t < 0) throw std::invalid_argument("module highest weights must be nonnegative");
}

TensorVector TensorVector::basis(const Shape& shape, const Index& index) {
  TensorVector v(shape);
  v.add(index, QScalar(1));
  return v;
}

QScalar TensorVector::coord(const Index& index) const {
  auto it = coords_.find(index);
  return it == coords_.end() ? QScalar() : it->second;
}

void TensorVector::add(const Index& index, const QScalar& c) {
  if (index.size() != shape_.size()) throw std::invalid_argument("index of the wrong length");
  for (std::size_t j = 0; j < index.size(); ++j)
    if (index[j] < 0 || index[j] > shape_[j])
      throw std::out_of_range("index outside the basis of V(" + std::to_string(shape_[j]) + ")");
  if (c.is_zero()) return;
  auto [it, fresh] = coords_.emplace(index, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) coords_.erase(it);
  }
}

TensorVector& TensorVector::operator+=(const TensorVector& o) {
  if (o.shape_ != shape_) throw std::invalid_argument("adding vectors of different shapes");
  for (const auto& [k, c] : o.coords_) add(k, c);
  return *this;
}

TensorVector& TensorVector::operator-=(const TensorVector& o) {
  if (o.shape_ != shape_) throw std::invalid_argument("subtracting vectors of different shapes");
  for (const auto& [k, c] : o.coords_) add(k, -c);
  return *this;
}

TensorVector& TensorVector::operator*=(const QScalar& c) {
  if (c.is_zero()) {
    coords_.clear();
    return *this;
  }
  for (auto& [k, x] : coords_) x *= c;
  return *this;
}

long TensorVector::weight_of(const Index& index) const {
  long w = 0;
  for (std::size_t j = 0; j < shape_.size(); ++j) w += shape_[j] - 2 * index[j];
  return w;
}

std::optional<long> TensorVector::weight() const {
  std::optional<long> w;
  for (const auto& [k, c] : coords_) {
    const long x = weight_of(k);
    if (w && *w != x) throw std::invalid_argument("vector is not weight-homogeneous");
    w = x;
  }
  return w;
}

long TensorVector::min_valuation() const {
  long v = QScalar::kInfiniteValuation;
  for (const auto& [k, c] : coords_) v = std::min(v, c.valuation());
  return v;
}

std::map<Index, Rational> TensorVector::at_zero() const {
  std::map<Index, Rational> out;
  for (const auto& [k, c] : coords_) {
    Rational x = c.at_zero();
    if (x != 0) out.emplace(k, x);
  }
  return out;
}

std::vector<Index> TensorVector::all_indices() const {
  std::vector<Index> out;
  Index idx(shape_.size(), 0);
  for (;;) {
    out.push_back(idx);
    std::size_t j = shape_.size();
    while (j > 0) {
      --j;
      if (idx[j] < shape_[j]) {
        ++idx[j];
        break;
      }
      idx[j] = 0;
      if (j == 0) return out;
    }
  }
}

std::vector<Index> TensorVector::weight_space(long weight) const {
  std::vector<Index> out;
  for (auto& idx : all_indices())
    if (weight_of(idx) == weight) out.push_back(std::move(idx));
  return out;
}

std::string TensorVector::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream s;
  bool first = true;
  for (const auto& [k, c] : coords_) {
    if (!first) s << " + ";
    first = false;
    s << "(" << c.to_string() << ")";
    for (std::size_t j = 0; j < k.size(); ++j) s << (j ? "⊗" : " ") << "F^(" << k[j] << ")v";
  }
  return s.str();
}

// ---------------------------------------------------------------------------
// Actions

Bracketing Bracketing::left_comb(int k) {
  if (k < 1) throw std::invalid_argument("bracketing needs at least one factor");
  Bracketing t{0, {}};
  for (int j = 1; j < k; ++j) t = Bracketing{-1, {t, Bracketing{j, {}}}};
  return t;
}

Bracketing Bracketing::right_comb(int k) {
  if (k < 1) throw std::invalid_argument("bracketing needs at least one factor");
  Bracketing t{k - 1, {}};
  for (int j = k - 2; j >= 0; --j) t = Bracketing{-1, {Bracketing{j, {}}, t}};
  return t;
}

int Bracketing::first() const { return leaf >= 0 ? leaf : kids.front().first(); }
int Bracketing::last() const { return leaf >= 0 ? leaf : kids.back().last(); }

namespace {

void push_atom(Monomial& m, Atom a) {
  if (a.n == 0) return;
  if (a.gen == Gen::K && !m.empty() && m.back().gen == Gen::K) {
    m.back().n += a.n;
    if (m.back().n == 0) m.pop_back();
    return;
  }
  m.push_back(a);
}

Monomial product(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (const auto& x : b) push_atom(out, x);
  return out;
}

std::vector<CoproductTerm> coproduct_atom(Atom a) {
  std::vector<CoproductTerm> out;
  const long r = a.n;
  switch (a.gen) {
    case Gen::K:
      out.push_back({QScalar(1), {a}, {a}});
      break;
    case Gen::E:
      for (long s = 0; s <= r; ++s) {
        CoproductTerm t{QScalar::q_pow(-s * (r - s)), {}, {}};
        push_atom(t.left, E(s));
        push_atom(t.right, E(r - s));
        push_atom(t.right, K(-s));
        out.push_back(std::move(t));
      }
      break;
    case Gen::F:
      for (long s = 0; s <= r; ++s) {
        CoproductTerm t{QScalar::q_pow(-s * (r - s)), {}, {}};
        push_atom(t.left, F(r - s));
        push_atom(t.left, K(s));
        push_atom(t.right, F(s));
        out.push_back(std::move(t));
      }
      break;
  }
  return out;
}

TensorVector apply_on_factor(Atom a, const TensorVector& v, int j) {
  TensorVector out(v.shape());
  const long t = v.shape()[j];
  for (const auto& [idx, c] : v.coords()) {
    const long s = idx[j];
    Index next = idx;
    switch (a.gen) {
      case Gen::K:
        out.add(idx, c * QScalar::q_pow(a.n * (t - 2 * s)));
        break;
      case Gen::E:
        if (a.n < 0) throw std::invalid_argument("negative divided power");
        if (s < a.n) break;
        next[j] = static_cast<int>(s - a.n);
        out.add(next, c * qbinom(t - s + a.n, a.n));
        break;
      case Gen::F:
        if (a.n < 0) throw std::invalid_argument("negative divided power");
        if (s + a.n > t) break;
        next[j] = static_cast<int>(s + a.n);
        out.add(next, c * qbinom(s + a.n, a.n));
        break;
    }
  }
  return out;
}

}  // namespace

std::vector<CoproductTerm> coproduct(const Monomial& m) {
  std::vector<CoproductTerm> terms{{QScalar(1), {}, {}}};
  for (const auto& a : m) {
    std::vector<CoproductTerm> next;
    for (const auto& t : terms)
      for (const auto& u : coproduct_atom(a))
        next.push_back({t.coeff * u.coeff, product(t.left, u.left), product(t.right, u.right)});
    terms = std::move(next);
  }
  return terms;
}

TensorVector act(const Monomial& m, const TensorVector& v, const Bracketing& tree) {
  if (tree.leaf >= 0) {
    TensorVector out = v;
    for (auto it = m.rbegin(); it != m.rend(); ++it) out = apply_on_factor(*it, out, tree.leaf);
    return out;
  }
  if (m.empty()) return v;
  TensorVector out(v.shape());
  for (const auto& t : coproduct(m)) {
    TensorVector w = act(t.right, v, tree.kids[1]);
    if (w.is_zero()) continue;
    w = act(t.left, w, tree.kids[0]);
    out += t.coeff * w;
  }
  return out;
}

TensorVector act(const Monomial& m, const TensorVector& v) {
  const Bracketing tree = Bracketing::left_comb(static_cast<int>(v.shape().size()));
  if (tree.first() != 0 || tree.last() + 1 != static_cast<int>(v.shape().size()))
    throw std::logic_error("bracketing does not cover the factors");
  return act(m, v, tree);
}

// ---------------------------------------------------------------------------
// Kashiwara operators

std::vector<std::pair<int, TensorVector>> string_decompose(const TensorVector& v) {
  const auto mu = v.weight();
  std::vector<std::pair<int, TensorVector>> parts;
  if (!mu) return parts;
  TensorVector rest = v;
  while (!rest.is_zero()) {
    int top = 0;
    TensorVector raised = rest;
    for (int s = 1;; ++s) {
      TensorVector next = act(E(s), rest);
      if (next.is_zero()) break;
      top = s;
      raised = std::move(next);
    }
    const long hw = *mu + 2 * top;
    if (hw < top) throw std::logic_error("string decomposition produced an impossible weight");
    TensorVector u = (QScalar(1) / qbinom(hw, top)) * raised;
    rest -= act(F(top), u);
    parts.emplace_back(top, std::move(u));
  }
  std::reverse(parts.begin(), parts.end());
  return parts;
}

TensorVector kashiwara_e(const TensorVector& v) {
  TensorVector out(v.shape());
  for (const auto& [s, u] : string_decompose(v))
    if (s >= 1) out += act(F(s - 1), u);
  return out;
}

TensorVector kashiwara_f(const TensorVector& v) {
  TensorVector out(v.shape());
  for (const auto& [s, u] : string_decompose(v)) out += act(F(s + 1), u);
  return out;
}

// ---------------------------------------------------------------------------
// Singular vectors

QScalar singular_coefficient(int t1, int t2, int r, int a) {
  if (a < 0 || a > r || a > t1) throw std::out_of_range("singular coefficient index");
  const long t = t1 - 1;
  QScalar c = QScalar::q_pow(a * (t - r + 2));
  if (a % 2) c = -c;
  for (long j = 1; j <= a; ++j) {
    c *= QScalar(1) - QScalar::q_pow(2 * (t2 - r + j));
    c /= QScalar(1) - QScalar::q_pow(2 * (t - j + 2));
  }
  return c;
}

std::vector<TensorVector> singular_vectors(int t1, int t2) {
  std::vector<TensorVector> out;
  const Shape shape{t1, t2};
  for (int r = 0; r <= std::min(t1, t2); ++r) {
    TensorVector u(shape);
    for (int a = 0; a <= std::min(r, t1); ++a) u.add({a, r - a}, singular_coefficient(t1, t2, r, a));
    out.push_back(std::move(u));
  }
  return out;
}

namespace {

using Matrix = std::vector<std::vector<QScalar>>;

// Reduced row echelon form in place; returns the pivot column of each row used.
std::vector<std::size_t> rref(Matrix& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t p = row;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    const QScalar inv = QScalar(1) / a[row][c];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][c].is_zero()) continue;
      const QScalar f = a[r][c];
      for (std::size_t k = 0; k < a[r].size(); ++k) a[r][k] -= f * a[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

QScalar determinant(Matrix a) {
  const std::size_t n = a.size();
  QScalar det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return QScalar();
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      const QScalar f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

}  // namespace

std::optional<TensorVector> kernel_vector(int t1, int t2, int r) {
  const Shape shape{t1, t2};
  const TensorVector probe(shape);
  const long mu = t1 + t2 - 2L * r;
  const auto source = probe.weight_space(mu);
  const auto target = probe.weight_space(mu + 2);
  Matrix m(target.size(), std::vector<QScalar>(source.size()));
  for (std::size_t c = 0; c < source.size(); ++c) {
    const TensorVector image = act(E(), TensorVector::basis(shape, source[c]));
    for (std::size_t row = 0; row < target.size(); ++row) m[row][c] = image.coord(target[row]);
  }
  const auto pivots = rref(m, source.size());
  if (source.size() - pivots.size() != 1) return std::nullopt;
  std::size_t free_col = 0;
  while (std::find(pivots.begin(), pivots.end(), free_col) != pivots.end()) ++free_col;
  TensorVector u(shape);
  u.add(source[free_col], QScalar(1));
  for (std::size_t row = 0; row < pivots.size(); ++row) u.add(source[pivots[row]], -m[row][free_col]);
  const QScalar lead = u.coord({0, r});
  if (lead.is_zero()) return std::nullopt;
  return (QScalar(1) / lead) * u;
}

StringBasis::StringBasis(int t1, int t2) : shape_{t1, t2}, us_(singular_vectors(t1, t2)) {
  for (int r = 0; r < static_cast<int>(us_.size()); ++r) {
    std::vector<TensorVector> string;
    for (int b = 0; b <= t1 + t2 - 2 * r; ++b) string.push_back(act(F(b), us_[r]));
    strings_.push_back(std::move(string));
  }
  const TensorVector probe(shape_);
  for (long mu = -(t1 + t2); mu <= t1 + t2; mu += 2) {
    Block blk;
    blk.basis = probe.weight_space(mu);
    for (int r = 0; r < static_cast<int>(us_.size()); ++r) {
      const long twice_b = t1 + t2 - 2L * r - mu;
      if (twice_b < 0 || twice_b / 2 >= static_cast<long>(strings_[r].size())) continue;
      blk.labels.emplace_back(r, static_cast<int>(twice_b / 2));
    }
    const std::size_t n = blk.basis.size();
    if (blk.labels.size() != n)
      throw std::logic_error("string basis has the wrong size in weight " + std::to_string(mu));
    // Columns are string elements; augment with the identity and reduce.
    Matrix m(n, std::vector<QScalar>(2 * n));
    for (std::size_t c = 0; c < n; ++c) {
      const auto& w = element(blk.labels[c].first, blk.labels[c].second);
      if (w.min_valuation() < 0) blk.entries_in_A = false;
      for (std::size_t row = 0; row < n; ++row) m[row][c] = w.coord(blk.basis[row]);
    }
    Matrix square(n, std::vector<QScalar>(n));
    for (std::size_t row = 0; row < n; ++row) {
      for (std::size_t c = 0; c < n; ++c) square[row][c] = m[row][c];
      m[row][n + row] = QScalar(1);
    }
    blk.det = determinant(square);
    if (blk.det.is_zero()) throw std::logic_error("string elements are linearly dependent");
    rref(m, n);
    blk.inverse.assign(n, std::vector<QScalar>(n));
    for (std::size_t row = 0; row < n; ++row)
      for (std::size_t c = 0; c < n; ++c) blk.inverse[row][c] = m[row][n + c];
    blocks_.emplace(mu, std::move(blk));
  }
}

const TensorVector& StringBasis::element(int r, int b) const {
  if (r < 0 || r >= static_cast<int>(strings_.size()) || b < 0 ||
      b >= static_cast<int>(strings_[r].size()))
    throw std::out_of_range("string element outside the basis");
  return strings_[r][b];
}

std::map<std::pair<int, int>, QScalar> StringBasis::coordinates(const TensorVector& v) const {
  if (v.shape() != shape_) throw std::invalid_argument("vector of another shape");
  std::map<std::pair<int, int>, QScalar> out;
  const auto mu = v.weight();
  if (!mu) return out;
  const Block& blk = blocks_.at(*mu);
  for (std::size_t row = 0; row < blk.labels.size(); ++row) {
    QScalar c;
    for (std::size_t k = 0; k < blk.basis.size(); ++k) {
      const QScalar x = v.coord(blk.basis[k]);
      if (!x.is_zero() && !blk.inverse[row][k].is_zero()) c += blk.inverse[row][k] * x;
    }
    if (!c.is_zero()) out.emplace(blk.labels[row], c);
  }
  return out;
}

TensorVector StringBasis::from_coordinates(const std::map<std::pair<int, int>, QScalar>& c) const {
  TensorVector out(shape_);
  for (const auto& [rb, x] : c)
    if (rb.second >= 0 && rb.second < static_cast<int>(strings_.at(rb.first).size()))
      out += x * strings_[rb.first][rb.second];
  return out;
}

std::vector<std::string> StringBasis::span_defects() const {
  std::vector<std::string> out;
  for (const auto& [mu, blk] : blocks_) {
    if (!blk.entries_in_A) out.push_back("weight " + std::to_string(mu) + ": entries outside 𝒜");
    if (blk.det.valuation() != 0)
      out.push_back("weight " + std::to_string(mu) + ": determinant " + blk.det.to_string() +
                    " is not a unit of 𝒜");
  }
  return out;
}

std::map<std::pair<int, int>, QScalar> string_coordinates(const TensorVector& v) {
  if (v.shape().size() != 2) throw std::invalid_argument("string coordinates need two factors");
  return StringBasis(v.shape()[0], v.shape()[1]).coordinates(v);
}

// ---------------------------------------------------------------------------
// Crystal limit

CrystalGraph crystal_of(int t) {
  if (t < 0 || t > 99) throw std::invalid_argument("V(t) crystal needs 0 ≤ t ≤ 99");
  CrystalGraph g;
  g.labels = 1;
  for (int s = 0; s <= t; ++s) {
    std::string id = std::to_string(s);
    if (id.size() < 2) id = "0" + id;
    g.nodes.push_back({"s" + id, Weight({Rational(t - 2 * s)}, std::nullopt), {s}, {t - s}});
    g.f_next.push_back({s < t ? static_cast<std::size_t>(s + 1) : kNoNode});
    g.e_next.push_back({s > 0 ? static_cast<std::size_t>(s - 1) : kNoNode});
    if (s < t) g.edges.push_back({static_cast<std::size_t>(s), static_cast<std::size_t>(s + 1), 0});
  }
  g.seed = 0;
  g.rebuild_index();
  return g;
}

namespace {

std::optional<Index> reduce_to_basis(const TensorVector& v, bool& basis_like) {
  const auto limit = v.at_zero();
  if (limit.empty()) return std::nullopt;
  if (limit.size() == 1 && limit.begin()->second == 1) return limit.begin()->first;
  basis_like = false;
  return std::nullopt;
}

std::optional<Index> to_index(const std::optional<TensorKind::Element>& x) {
  if (!x) return std::nullopt;
  return Index{static_cast<int>((*x)[0]), static_cast<int>((*x)[1])};
}

}  // namespace

std::vector<LimitRow> crystal_limit_table(int t1, int t2) {
  const Shape shape{t1, t2};
  const StringBasis sb(t1, t2);
  const CrystalGraph b1 = crystal_of(t1), b2 = crystal_of(t2);
  const TensorKind rule({&b1, &b2});
  std::vector<LimitRow> rows;
  for (const auto& idx : TensorVector(shape).all_indices()) {
    LimitRow row;
    row.source = idx;
    const int s1 = idx[0], s2 = idx[1];
    // ẽ and f̃ shift the string position b of every coordinate by ∓1.
    const auto coords = sb.coordinates(TensorVector::basis(shape, idx));
    std::map<std::pair<int, int>, QScalar> ec, fc;
    for (const auto& [rb, c] : coords) {
      if (c.valuation() < 0) row.lattice = false;
      if (rb.second >= 1) ec.emplace(std::make_pair(rb.first, rb.second - 1), c);
      fc.emplace(std::make_pair(rb.first, rb.second + 1), c);
    }
    const TensorVector e = sb.from_coordinates(ec), f = sb.from_coordinates(fc);
    for (const TensorVector* w : {&e, &f}) {
      if (w->min_valuation() < 0)
        throw NotInLattice("Kashiwara operator leaves the lattice at F^(" + std::to_string(s1) +
                           ")v⊗F^(" + std::to_string(s2) + ")v");
    }
    row.e_exact = reduce_to_basis(e, row.e_basis_like);
    row.f_exact = reduce_to_basis(f, row.f_basis_like);

    if (t1 >= s1 + s2) {
      if (s1 >= 1) row.e_lemma = Index{s1 - 1, s2};
    } else if (s2 >= 1) {
      row.e_lemma = Index{s1, s2 - 1};
    }
    if (t1 > s1 + s2) {
      row.f_lemma = Index{s1 + 1, s2};
    } else if (s2 + 1 <= t2) {
      row.f_lemma = Index{s1, s2 + 1};
    }

    const TensorKind::Element x{static_cast<std::size_t>(s1), static_cast<std::size_t>(s2)};
    row.e_rule = to_index(rule.raise(x, 0));
    row.f_rule = to_index(rule.lower(x, 0));
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Verification

namespace {

std::string shape_name(const Shape& s) {
  std::string out = "(";
  for (std::size_t j = 0; j < s.size(); ++j) out += (j ? "," : "") + std::to_string(s[j]);
  return out + ")";
}

std::string index_name(const std::optional<Index>& i) {
  if (!i) return "0";
  return shape_name(*i);
}

}  // namespace

Report verify_lemma(int t1, int t2) {
  Report rep;
  const Shape shape{t1, t2};
  const auto us = singular_vectors(t1, t2);

  std::string bad_e, bad_k, bad_kernel, bad_limit;
  for (int r = 0; r < static_cast<int>(us.size()); ++r) {
    const auto& u = us[r];
    if (!act(E(), u).is_zero()) bad_e += " r=" + std::to_string(r);
    if (!(act(K(), u) == QScalar::q_pow(t1 + t2 - 2 * r) * u)) bad_k += " r=" + std::to_string(r);
    auto oracle = kernel_vector(t1, t2, r);
    if (!oracle || !(*oracle == u)) bad_kernel += " r=" + std::to_string(r);
    bool ok = u.min_valuation() >= 0;
    if (ok) {
      auto lim = u.at_zero();
      ok = lim.size() == 1 && lim.begin()->first == Index{0, r} && lim.begin()->second == 1;
    }
    if (!ok) bad_limit += " r=" + std::to_string(r);
  }
  rep.add("singular_E_zero", bad_e.empty(), bad_e);
  rep.add("singular_weight", bad_k.empty(), bad_k);
  rep.add("closed_form_matches_kernel", bad_kernel.empty(), bad_kernel);
  rep.add("singular_limit", bad_limit.empty(), bad_limit);

  {
    std::string bad;
    for (const auto& d : StringBasis(t1, t2).span_defects()) bad += " " + d + ";";
    rep.add("string_basis_spans_lattice", bad.empty(), bad);
  }

  std::vector<LimitRow> rows;
  try {
    rows = crystal_limit_table(t1, t2);
  } catch (const NotInLattice& err) {
    rep.add("lattice_preserved", false, err.what());
    return rep;
  }
  std::string lattice, basis_like, lemma, rule, inverse;
  for (const auto& row : rows) {
    const std::string src = index_name(row.source);
    if (!row.lattice) lattice += " " + src;
    if (!row.e_basis_like || !row.f_basis_like) basis_like += " " + src;
    if (row.e_exact != row.e_lemma || row.f_exact != row.f_lemma)
      lemma += " " + src + ": ẽ→" + index_name(row.e_exact) + " f̃→" + index_name(row.f_exact);
    if (row.e_exact != row.e_rule || row.f_exact != row.f_rule)
      rule += " " + src + ": rule ẽ→" + index_name(row.e_rule) + " f̃→" + index_name(row.f_rule);
    if (row.f_exact) {
      for (const auto& other : rows)
        if (other.source == *row.f_exact && other.e_exact != row.source) inverse += " " + src;
    }
  }
  rep.add("lattice_preserved", lattice.empty(), lattice);
  rep.add("limit_basis_like", basis_like.empty(), basis_like);
  rep.add("limit_matches_lemma", lemma.empty(), lemma);
  rep.add("limit_matches_rule", rule.empty(), rule);
  rep.add("limit_quasi_inverse", inverse.empty(), inverse);
  return rep;
}

Report verify_relations(const Shape& shape) {
  Report rep;
  std::string kek, kfk, comm, kinv;
  const QScalar q2 = QScalar::q_pow(2), qm2 = QScalar::q_pow(-2);
  const QScalar denom = QScalar::q_pow(1) - QScalar::q_pow(-1);
  for (const auto& idx : TensorVector(shape).all_indices()) {
    const TensorVector b = TensorVector::basis(shape, idx);
    const std::string name = " " + shape_name(idx);
    if (!(act({K(), E(), K(-1)}, b) == q2 * act(E(), b))) kek += name;
    if (!(act({K(), F(), K(-1)}, b) == qm2 * act(F(), b))) kfk += name;
    const TensorVector lhs = act({E(), F()}, b) - act({F(), E()}, b);
    const TensorVector rhs = (QScalar(1) / denom) * (act(K(), b) - act(K(-1), b));
    if (!(lhs == rhs)) comm += name;
    if (!(act(K(1), act(K(-1), b)) == b)) kinv += name;
  }
  rep.add("KEK^-1=q^2E", kek.empty(), kek);
  rep.add("KFK^-1=q^-2F", kfk.empty(), kfk);
  rep.add("[E,F]=(K-K^-1)/(q-q^-1)", comm.empty(), comm);
  rep.add("KK^-1=1", kinv.empty(), kinv);
  return rep;
}

Report verify_coassociativity(const Shape& shape, int max_power) {
  Report rep;
  const int k = static_cast<int>(shape.size());
  const Bracketing left = Bracketing::left_comb(k), right = Bracketing::right_comb(k);
  std::vector<Atom> atoms{K(1), K(-1)};
  for (int r = 1; r <= max_power; ++r) {
    atoms.push_back(E(r));
    atoms.push_back(F(r));
  }
  std::string bad;
  for (const auto& idx : TensorVector(shape).all_indices()) {
    const TensorVector b = TensorVector::basis(shape, idx);
    for (const auto& a : atoms)
      if (!(act({a}, b, left) == act({a}, b, right))) bad += " " + shape_name(idx);
  }
  rep.add("bracketings_agree " + shape_name(shape), bad.empty(), bad);
  return rep;
}

Report verify_qbinom(int max_m) {
  Report rep;
  std::string laurent, bar;
  for (int m = 0; m <= max_m; ++m)
    for (int n = 0; n <= m; ++n) {
      const QScalar c = qbinom(m, n);
      const std::string name = " (" + std::to_string(m) + "," + std::to_string(n) + ")";
      if (!c.is_laurent()) laurent += name;
      if (!(c.bar() == c)) bar += name;
    }
  rep.add("qbinom_laurent", laurent.empty(), laurent);
  rep.add("qbinom_bar_symmetric", bar.empty(), bar);
  return rep;
}

}  // namespace loom::sl2
