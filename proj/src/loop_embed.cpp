#include "loom/loop_embed.hpp"

#include <map>
#include <set>

namespace loom {

Rational kappa(const std::vector<std::size_t>& word, long n, long j, const EnergyTable& table) {
  const long L = static_cast<long>(word.size());
  if (j < 0 || j > L) throw std::out_of_range("κ index outside 0..Nm");
  const Rational N(table.N);
  auto chi = [&](long s) { return Rational(table.at(word[s - 1], word[s])); };
  Rational before = 0, after = 0;
  for (long s = 1; s < j; ++s) before += Rational(s) * chi(s);
  for (long s = std::max(j, 1L); s < L; ++s) after += chi(s);
  const Rational top = Rational(maj(word, table)) / N + Rational(n);
  return ratio(j, L) * top - before / N - Rational(j) * after / N;
}

LoopEmbedding::LoopEmbedding(const CartanData& cd, int i, int m, Execution execution)
    : cd_(cd),
      i_(i),
      m_(m),
      kind_(cd_),
      b_(fundamental_crystal(kind_, i, execution)),
      table_(energy_table(b_.graph, choose_N(b_.elements))),
      tensor_(TensorKind::power(b_.graph, m)),
      affine_(tensor_) {
  if (m < 1) throw std::invalid_argument("tensor power must be positive");
}

std::vector<std::size_t> LoopEmbedding::refined(const TensorKind::Element& b) const {
  return refine(b_, b, table_.N);
}

long LoopEmbedding::maj_of(const TensorKind::Element& b) const { return maj(refined(b), table_); }

Rational LoopEmbedding::kappa(const TensorKind::Element& b, long n, long j) const {
  return loom::kappa(refined(b), n, j, table_);
}

PsiImage LoopEmbedding::psi(const AffineElement& x) const {
  const auto word = refined(x.base);
  const long L = static_cast<long>(word.size());
  const Rational N(table_.N);
  PsiImage img{Path::constant(cd_.size(), Ambient::Affine), {}, {}};
  Weight lambda = cd_.zero(Ambient::Classical);
  std::vector<Segment> segs;
  const Rational len = ratio(1, L);
  for (long j = 0; j <= L; ++j) {
    if (j > 0) lambda += b_.graph.nodes[word[j - 1]].wt * (Rational(1) / N);
    img.kappas.push_back(loom::kappa(word, x.degree, j, table_));
    img.turning_points.push_back(lambda.with_delta(img.kappas.back()));
    if (j > 0) {
      const auto& a = img.turning_points[j - 1];
      const auto& b = img.turning_points[j];
      segs.push_back({(b - a) * Rational(L), len});
    }
  }
  img.path = Path(std::move(segs));
  return img;
}

long LoopEmbedding::c_class(const AffineElement& x) const {
  const long mj = maj_of(x.base);
  if (mj % table_.N != 0)
    throw GridViolation("Maj_χ = " + std::to_string(mj) + " is not divisible by N = " +
                        std::to_string(table_.N));
  const long s = (mj / table_.N + x.degree) % m_;
  return s < 0 ? s + m_ : s;
}

std::vector<AffineElement> LoopEmbedding::window_elements(long window) const {
  const std::size_t n = b_.graph.size();
  std::size_t total = 1;
  for (int k = 0; k < m_; ++k) total *= n;
  std::vector<AffineElement> out;
  out.reserve(total * static_cast<std::size_t>(2 * window + 1));
  TensorKind::Element b(static_cast<std::size_t>(m_), 0);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (int k = m_ - 1; k >= 0; --k) {
      b[k] = c % n;
      c /= n;
    }
    for (long d = -window; d <= window; ++d) out.push_back({b, d});
  }
  return out;
}

std::vector<PsiImage> LoopEmbedding::psi_all(const std::vector<AffineElement>& xs,
                                             Execution execution) const {
  std::vector<PsiImage> out(xs.size(), PsiImage{Path::constant(cd_.size(), Ambient::Affine), {}, {}});
  const long count = static_cast<long>(xs.size());
  const bool par = execution == Execution::Parallel;
#pragma omp parallel for schedule(dynamic) if (par)
  for (long k = 0; k < count; ++k) out[k] = psi(xs[k]);
  return out;
}

Path LoopEmbedding::highest_path(long n) const {
  return Path::linear((cd_.classical_fundamental(i_) * Rational(m_)).with_delta(Rational(n)));
}

namespace {

std::string show(const std::set<std::string>& s, std::size_t limit = 3) {
  std::string out;
  std::size_t k = 0;
  for (const auto& x : s) {
    if (k++ == limit) {
      out += ", ...";
      break;
    }
    if (!out.empty()) out += ", ";
    out += x;
  }
  return out;
}

std::set<std::string> difference(const std::set<std::string>& a, const std::set<std::string>& b) {
  std::set<std::string> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

std::string set_diff_detail(const std::set<std::string>& a, const std::set<std::string>& b) {
  auto ab = difference(a, b), ba = difference(b, a);
  std::string out;
  if (!ab.empty()) out += std::to_string(ab.size()) + " only in image: " + show(ab);
  if (!ba.empty()) {
    if (!out.empty()) out += "; ";
    out += std::to_string(ba.size()) + " only in pieces: " + show(ba);
  }
  return out;
}

long degree_of(const Weight& w) { return to_long(w.delta_or_zero()); }

}  // namespace

Report verify_decomposition(const CartanData& cd, int i, int m, long window, Execution execution,
                            std::size_t node_cap) {
  if (window < 2) throw std::invalid_argument("decomposition check needs a window of at least 2");
  if (m < 1) throw std::invalid_argument("tensor power must be positive");
  Report rep;
  LoopEmbedding emb(cd, i, m, execution);
  const long inner = window - 1;

  const auto xs = emb.window_elements(window);
  const auto images = emb.psi_all(xs, execution);

  std::vector<Realized<PathKind>> pieces;
  GenerateOptions opt;
  opt.window = window;
  opt.node_cap = node_cap;
  opt.execution = execution;
  for (long n = 0; n < m; ++n) pieces.push_back(generate(emb.path_kind(), emb.highest_path(n), opt));

  auto interior_ids = [&](const CrystalGraph& g) {
    std::set<std::string> s;
    for (const auto& node : g.nodes)
      if (std::abs(degree_of(node.wt)) <= inner) s.insert(node.id);
    return s;
  };
  std::vector<std::set<std::string>> piece_inner, piece_all;
  for (const auto& p : pieces) {
    piece_inner.push_back(interior_ids(p.graph));
    auto ids = node_ids(p.graph);
    piece_all.emplace_back(ids.begin(), ids.end());
  }

  std::map<std::string, std::size_t> image_index;
  std::set<std::string> image_inner;
  std::vector<std::set<std::string>> class_inner(static_cast<std::size_t>(m));
  std::size_t collisions = 0;
  std::string collision_detail;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const std::string key = images[k].path.key();
    if (!image_index.emplace(key, k).second && collisions++ == 0)
      collision_detail = emb.affinized().key(xs[k]) + " and " +
                         emb.affinized().key(xs[image_index[key]]) + " share " + key;
    if (std::abs(xs[k].degree) <= inner) {
      image_inner.insert(key);
      class_inner[emb.c_class(xs[k])].insert(key);
    }
  }

  std::set<std::string> union_inner;
  for (const auto& s : piece_inner) union_inner.insert(s.begin(), s.end());
  rep.add("image_equals_union", image_inner == union_inner, set_diff_detail(image_inner, union_inner));

  {
    std::string detail;
    bool ok = true;
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) {
        auto common = difference(piece_all[a], difference(piece_all[a], piece_all[b]));
        if (!common.empty()) {
          ok = false;
          detail += "pieces " + std::to_string(a) + " and " + std::to_string(b) + " share " +
                    show(common) + ". ";
        }
      }
    rep.add("pieces_disjoint", ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    for (int s = 0; s < m; ++s)
      if (class_inner[s] != piece_inner[s]) {
        ok = false;
        detail += "class " + std::to_string(s) + ": " + set_diff_detail(class_inner[s], piece_inner[s]) + ". ";
      }
    rep.add("c_class_matches_piece", ok, detail);
  }

  {
    std::size_t bad = 0;
    std::string detail;
    const auto& aff = emb.affinized();
    for (std::size_t k = 0; k < xs.size(); ++k) {
      if (std::abs(xs[k].degree) > inner) continue;
      for (int j = 0; j < cd.size(); ++j) {
        for (bool up : {true, false}) {
          auto y = up ? aff.raise(xs[k], j) : aff.lower(xs[k], j);
          auto p = up ? raise(cd, images[k].path, j) : lower(cd, images[k].path, j);
          bool same = y.has_value() == p.has_value();
          if (same && y) same = emb.psi(*y).path == *p;
          if (!same && bad++ == 0)
            detail = std::string(up ? "e_" : "f_") + std::to_string(j) + " at " + aff.key(xs[k]);
        }
      }
    }
    rep.add("psi_edge_preserving", bad == 0,
            bad ? std::to_string(bad) + " mismatches, first " + detail : "");
  }

  rep.add("psi_injective", collisions == 0, collision_detail);

  {
    bool ok = true;
    std::string detail;
    for (long n = -window; n <= window; ++n) {
      AffineElement top{emb.tensor().seed(), n};
      if (!(emb.psi(top).path == emb.highest_path(n))) {
        ok = false;
        detail += "degree " + std::to_string(n) + " ";
      }
    }
    rep.add("highest_weight_images", ok, detail);
  }

  {
    std::size_t bad = 0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
      const auto& kap = images[k].kappas;
      if (kap.front() != 0 || kap.back() != Rational(xs[k].degree)) ++bad;
      if (images[k].path.endpoint() != emb.affinized().weight(xs[k])) ++bad;
    }
    rep.add("kappa_endpoints", bad == 0, bad ? std::to_string(bad) + " violations" : "");
  }

  {
    std::size_t bad = 0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
      std::vector<Path> parts;
      for (auto f : xs[k].base) parts.push_back(emb.fundamental().elements[f]);
      if (!(project(images[k].path) == concat(parts))) ++bad;
    }
    rep.add("projection_law", bad == 0, bad ? std::to_string(bad) + " violations" : "");
  }

  {
    std::size_t bad = 0;
    const auto& aff = emb.affinized();
    for (const auto& x : xs)
      for (int j = 0; j < cd.size(); ++j)
        if (auto y = aff.lower(x, j); y && std::abs(y->degree) <= window)
          if (emb.c_class(*y) != emb.c_class(x)) ++bad;
    rep.add("classes_closed", bad == 0, bad ? std::to_string(bad) + " edges cross classes" : "");
  }

  {
    bool ok = true;
    for (const auto& p : pieces) ok = ok && window_connected(p.graph);
    rep.add("pieces_connected", ok);
  }

  {
    bool ok = true;
    std::string detail;
    for (long r = -inner; r <= inner; ++r) {
      const long s = ((r % m) + m) % m;
      if (!piece_all[s].count(emb.highest_path(r).key())) {
        ok = false;
        detail += "π_{mϖ+" + std::to_string(r) + "δ} not in piece " + std::to_string(s) + ". ";
      }
    }
    rep.add("periodicity", ok, detail);
  }

  {
    std::size_t piece_total = 0;
    std::string detail = "pieces";
    for (const auto& s : piece_inner) {
      piece_total += s.size();
      detail += " " + std::to_string(s.size());
    }
    detail += ", image " + std::to_string(image_inner.size());
    rep.add("counts", piece_total == image_inner.size(), detail);
  }
  return rep;
}

}  // namespace loom
