#include "loom/crystal.hpp"

#include <charconv>
#include <functional>
#include <set>
#include <sstream>

namespace loom {

std::size_t node_cap_from_env() {
  if (const char* env = std::getenv("LOOM_NODE_CAP")) {
    const std::string_view text(env);
    std::size_t v = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec == std::errc() && end == text.data() + text.size() && v > 0) return v;
    throw std::invalid_argument(std::string("LOOM_NODE_CAP is not a positive integer: ") + env);
  }
  return kDefaultNodeCap;
}

bool in_window(const Weight& w, const std::optional<long>& window) {
  if (!window || !w.delta()) return true;
  return abs(*w.delta()) <= Rational(*window);
}

std::optional<std::size_t> CrystalGraph::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void CrystalGraph::rebuild_index() {
  index_.clear();
  index_.reserve(nodes.size());
  for (std::size_t v = 0; v < nodes.size(); ++v) index_.emplace(nodes[v].id, v);
}

// ---------------------------------------------------------------------------
// Tensor products

TensorKind::TensorKind(std::vector<const CrystalGraph*> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("tensor product needs at least one factor");
  labels_ = factors_.front()->labels;
  for (const auto* g : factors_) {
    if (g->labels != labels_) throw std::invalid_argument("tensor factors have different index sets");
    if (g->truncated) throw std::invalid_argument("tensor factors must be finite untruncated crystals");
  }
}

TensorKind TensorKind::power(const CrystalGraph& g, int m) {
  if (m < 1) throw std::invalid_argument("tensor power must be positive");
  return TensorKind(std::vector<const CrystalGraph*>(static_cast<std::size_t>(m), &g));
}

void TensorKind::check(const Element& x) const {
  if (x.size() != factors_.size())
    throw NotInCrystal("tensor element has " + std::to_string(x.size()) + " factors, expected " +
                       std::to_string(factors_.size()));
  for (std::size_t k = 0; k < x.size(); ++k)
    if (x[k] >= factors_[k]->size())
      throw NotInCrystal("factor " + std::to_string(k) + " is not a node of its crystal");
}

TensorKind::Element TensorKind::seed() const {
  Element x;
  for (const auto* g : factors_) x.push_back(g->seed);
  return x;
}

std::string TensorKind::key(const Element& x) const {
  check(x);
  std::string out;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (k) out += "⊗";
    out += factors_[k]->nodes[x[k]].id;
  }
  return out;
}

Weight TensorKind::weight(const Element& x) const {
  check(x);
  Weight w = factors_[0]->nodes[x[0]].wt;
  for (std::size_t k = 1; k < x.size(); ++k) w += factors_[k]->nodes[x[k]].wt;
  return w;
}

std::vector<long> TensorKind::kashiwara_functions(const Element& x, int i) const {
  check(x);
  std::vector<long> r(x.size());
  long shift = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const CrystalNode& b = factors_[k]->nodes[x[k]];
    r[k] = b.eps[i] - shift;
    shift += b.phi[i] - b.eps[i];
  }
  return r;
}

long TensorKind::epsilon(const Element& x, int i) const {
  auto r = kashiwara_functions(x, i);
  return std::max(0L, *std::max_element(r.begin(), r.end()));
}

long TensorKind::phi(const Element& x, int i) const {
  long pairing = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const CrystalNode& b = factors_[k]->nodes[x[k]];
    pairing += b.phi[i] - b.eps[i];
  }
  return epsilon(x, i) + pairing;
}

std::size_t TensorKind::raise_position(const Element& x, int i) const {
  auto r = kashiwara_functions(x, i);
  return static_cast<std::size_t>(std::max_element(r.begin(), r.end()) - r.begin());
}

std::size_t TensorKind::lower_position(const Element& x, int i) const {
  auto r = kashiwara_functions(x, i);
  std::size_t best = 0;
  for (std::size_t k = 1; k < r.size(); ++k)
    if (r[k] >= r[best]) best = k;
  return best;
}

std::optional<TensorKind::Element> TensorKind::raise(const Element& x, int i) const {
  if (epsilon(x, i) == 0) return std::nullopt;
  const std::size_t k = raise_position(x, i);
  const std::size_t y = factors_[k]->e_next[x[k]][i];
  if (y == kNoNode) return std::nullopt;
  Element out = x;
  out[k] = y;
  return out;
}

std::optional<TensorKind::Element> TensorKind::lower(const Element& x, int i) const {
  if (phi(x, i) == 0) return std::nullopt;
  const std::size_t k = lower_position(x, i);
  const std::size_t y = factors_[k]->f_next[x[k]][i];
  if (y == kNoNode) return std::nullopt;
  Element out = x;
  out[k] = y;
  return out;
}

// ---------------------------------------------------------------------------
// Graph-level checks

namespace {

std::vector<std::vector<std::size_t>> undirected(const CrystalGraph& g) {
  std::vector<std::vector<std::size_t>> adj(g.size());
  for (const auto& e : g.edges) {
    adj[e.src].push_back(e.dst);
    adj[e.dst].push_back(e.src);
  }
  return adj;
}

std::string node_label(const CrystalGraph& g, std::size_t v) { return "node " + g.nodes[v].id; }

}  // namespace

bool is_connected(const CrystalGraph& g) {
  if (g.nodes.empty()) return false;
  auto adj = undirected(g);
  std::vector<bool> seen(g.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == g.size();
}

bool is_indecomposable(const CrystalGraph& g) {
  if (g.truncated)
    throw std::invalid_argument("indecomposability is undefined on a truncated graph");
  return is_connected(g);
}

bool window_connected(const CrystalGraph& g) { return is_connected(g); }

std::vector<std::string> normality_audit(const CrystalGraph& g) {
  std::vector<std::string> out;
  if (g.truncated) {
    out.push_back("normality audit needs an untruncated graph");
    return out;
  }
  for (std::size_t v = 0; v < g.size(); ++v) {
    for (int i = 0; i < g.labels; ++i) {
      long up = 0;
      for (auto w = g.e_next[v][i]; w != kNoNode; w = g.e_next[w][i]) {
        if (++up > static_cast<long>(g.size())) break;
      }
      long down = 0;
      for (auto w = g.f_next[v][i]; w != kNoNode; w = g.f_next[w][i]) {
        if (++down > static_cast<long>(g.size())) break;
      }
      if (up != g.nodes[v].eps[i])
        out.push_back(node_label(g, v) + ": ε_" + std::to_string(i) + " = " +
                      std::to_string(g.nodes[v].eps[i]) + " but e-string has length " +
                      std::to_string(up));
      if (down != g.nodes[v].phi[i])
        out.push_back(node_label(g, v) + ": φ_" + std::to_string(i) + " = " +
                      std::to_string(g.nodes[v].phi[i]) + " but f-string has length " +
                      std::to_string(down));
    }
  }
  return out;
}

std::vector<std::string> quasi_inverse_audit(const CrystalGraph& g) {
  std::vector<std::string> out;
  for (std::size_t v = 0; v < g.size(); ++v) {
    for (int i = 0; i < g.labels; ++i) {
      auto w = g.f_next[v][i];
      if (w != kNoNode && g.e_next[w][i] != v)
        out.push_back(node_label(g, v) + ": e_" + std::to_string(i) + " f_" +
                      std::to_string(i) + " is not the identity");
      auto u = g.e_next[v][i];
      if (u != kNoNode && g.f_next[u][i] != v)
        out.push_back(node_label(g, v) + ": f_" + std::to_string(i) + " e_" +
                      std::to_string(i) + " is not the identity");
    }
  }
  return out;
}

std::vector<std::string> weight_audit(const CartanData& cd, const CrystalGraph& g) {
  std::vector<std::string> out;
  for (const auto& e : g.edges) {
    const Weight& a = g.nodes[e.src].wt;
    const Weight& b = g.nodes[e.dst].wt;
    if (a - b != cd.simple_root(e.label, a.ambient()))
      out.push_back(node_label(g, e.src) + ": f_" + std::to_string(e.label) +
                    " does not shift the weight by -α_" + std::to_string(e.label));
  }
  for (std::size_t v = 0; v < g.size(); ++v)
    for (int i = 0; i < g.labels; ++i)
      if (Rational(g.nodes[v].phi[i] - g.nodes[v].eps[i]) != cd.pairing(i, g.nodes[v].wt))
        out.push_back(node_label(g, v) + ": φ_" + std::to_string(i) + " − ε_" +
                      std::to_string(i) + " differs from the pairing with the weight");
  return out;
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

std::string base_signature(const CrystalGraph& g, std::size_t v) {
  std::ostringstream s;
  const auto& n = g.nodes[v];
  s << n.wt.key() << '|';
  for (int i = 0; i < g.labels; ++i)
    s << n.eps[i] << ',' << n.phi[i] << ',' << (g.f_next[v][i] != kNoNode)
      << (g.e_next[v][i] != kNoNode) << ';';
  return s.str();
}

// Colour refinement run jointly on both graphs so colours are comparable.
std::pair<std::vector<int>, std::vector<int>> refine_colours(const CrystalGraph& a,
                                                             const CrystalGraph& b) {
  auto initial = [](const CrystalGraph& g) {
    std::vector<std::string> sig(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) sig[v] = base_signature(g, v);
    return sig;
  };
  std::vector<std::string> sa = initial(a), sb = initial(b);
  std::vector<int> ca, cb;
  std::size_t classes = 0;
  for (;;) {
    std::map<std::string, int> palette;
    for (auto& s : sa) palette.emplace(s, 0);
    for (auto& s : sb) palette.emplace(s, 0);
    int next = 0;
    for (auto& [s, c] : palette) c = next++;
    ca.assign(a.size(), 0);
    cb.assign(b.size(), 0);
    for (std::size_t v = 0; v < a.size(); ++v) ca[v] = palette[sa[v]];
    for (std::size_t v = 0; v < b.size(); ++v) cb[v] = palette[sb[v]];
    if (palette.size() == classes) break;
    classes = palette.size();
    auto step = [](const CrystalGraph& g, const std::vector<int>& c) {
      std::vector<std::string> sig(g.size());
      for (std::size_t v = 0; v < g.size(); ++v) {
        std::ostringstream s;
        s << c[v] << ':';
        for (int i = 0; i < g.labels; ++i) {
          auto f = g.f_next[v][i], e = g.e_next[v][i];
          s << (f == kNoNode ? -1 : c[f]) << ',' << (e == kNoNode ? -1 : c[e]) << ';';
        }
        sig[v] = s.str();
      }
      return sig;
    };
    sa = step(a, ca);
    sb = step(b, cb);
  }
  return {ca, cb};
}

}  // namespace

std::optional<std::vector<std::size_t>> isomorphic(const CrystalGraph& g1, const CrystalGraph& g2) {
  if (g1.size() != g2.size() || g1.labels != g2.labels || g1.edges.size() != g2.edges.size())
    return std::nullopt;
  auto [c1, c2] = refine_colours(g1, g2);
  {
    auto s1 = c1, s2 = c2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
  }
  std::map<int, std::vector<std::size_t>> by_colour;
  for (std::size_t v = 0; v < g2.size(); ++v) by_colour[c2[v]].push_back(v);

  std::vector<std::size_t> map(g1.size(), kNoNode), inverse(g2.size(), kNoNode);

  // Assigns x -> y and everything it forces through the operator tables.
  // Returns the assignments made so they can be undone, or nullopt on conflict.
  auto assign = [&](std::size_t x, std::size_t y) -> std::optional<std::vector<std::size_t>> {
    std::vector<std::size_t> made;
    std::vector<std::pair<std::size_t, std::size_t>> todo{{x, y}};
    auto undo = [&] {
      for (auto v : made) {
        inverse[map[v]] = kNoNode;
        map[v] = kNoNode;
      }
    };
    while (!todo.empty()) {
      auto [u, w] = todo.back();
      todo.pop_back();
      if (map[u] != kNoNode || inverse[w] != kNoNode) {
        if (map[u] != w) {
          undo();
          return std::nullopt;
        }
        continue;
      }
      if (c1[u] != c2[w]) {
        undo();
        return std::nullopt;
      }
      map[u] = w;
      inverse[w] = u;
      made.push_back(u);
      for (int i = 0; i < g1.labels; ++i) {
        using Table = std::vector<std::vector<std::size_t>> CrystalGraph::*;
        for (Table tab : {&CrystalGraph::f_next, &CrystalGraph::e_next}) {
          auto a = (g1.*tab)[u][i], b = (g2.*tab)[w][i];
          if ((a == kNoNode) != (b == kNoNode)) {
            undo();
            return std::nullopt;
          }
          if (a != kNoNode) todo.emplace_back(a, b);
        }
      }
    }
    return made;
  };

  std::function<bool(std::size_t)> search = [&](std::size_t start) -> bool {
    std::size_t x = start;
    while (x < g1.size() && map[x] != kNoNode) ++x;
    if (x == g1.size()) return true;
    for (auto y : by_colour[c1[x]]) {
      if (inverse[y] != kNoNode) continue;
      auto made = assign(x, y);
      if (!made) continue;
      if (search(x + 1)) return true;
      for (auto v : *made) {
        inverse[map[v]] = kNoNode;
        map[v] = kNoNode;
      }
    }
    return false;
  };
  if (!search(0)) return std::nullopt;
  return map;
}

CrystalGraph restrict_window(const CrystalGraph& g, long radius) {
  CrystalGraph out;
  out.labels = g.labels;
  out.window = radius;
  out.truncated = true;
  std::vector<std::size_t> remap(g.size(), kNoNode);
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (!in_window(g.nodes[v].wt, radius)) continue;
    remap[v] = out.nodes.size();
    out.nodes.push_back(g.nodes[v]);
  }
  out.f_next.assign(out.nodes.size(), std::vector<std::size_t>(g.labels, kNoNode));
  out.e_next = out.f_next;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (remap[v] == kNoNode) continue;
    for (int i = 0; i < g.labels; ++i) {
      if (auto w = g.f_next[v][i]; w != kNoNode) out.f_next[remap[v]][i] = remap[w];
      if (auto w = g.e_next[v][i]; w != kNoNode) out.e_next[remap[v]][i] = remap[w];
    }
  }
  for (const auto& e : g.edges)
    if (remap[e.src] != kNoNode && remap[e.dst] != kNoNode)
      out.edges.push_back({remap[e.src], remap[e.dst], e.label});
  out.seed = remap[g.seed];
  out.rebuild_index();
  return out;
}

std::vector<std::string> node_ids(const CrystalGraph& g) {
  std::vector<std::string> ids;
  ids.reserve(g.size());
  for (const auto& n : g.nodes) ids.push_back(n.id);
  return ids;
}

}  // namespace loom
