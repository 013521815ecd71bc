#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdlib>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "loom/cartan.hpp"
#include "loom/errors.hpp"
#include "loom/weight.hpp"

namespace loom {

inline constexpr std::size_t kNoNode = std::numeric_limits<std::size_t>::max();
inline constexpr std::size_t kDefaultNodeCap = 1'000'000;

/// Node cap from LOOM_NODE_CAP, or kDefaultNodeCap when unset.
std::size_t node_cap_from_env();

struct CrystalNode {
  std::string id;
  Weight wt;
  std::vector<long> eps;
  std::vector<long> phi;
};

/// Edge (src, dst, i) means f_i(src) = dst.
struct CrystalEdge {
  std::size_t src = 0;
  std::size_t dst = 0;
  int label = 0;
  friend auto operator<=>(const CrystalEdge&, const CrystalEdge&) = default;
};

/// Finite labelled digraph of canonical element keys with wt/ε/φ tables.
///
/// Nodes are sorted by id. f_next/e_next hold the targets of f_i/e_i for
/// every node and label (kNoNode when the operator is null or leaves the
/// window). Both tables are filled from independent operator calls, so the
/// quasi-inverse property is something to audit, not an assumption.
struct CrystalGraph {
  int labels = 0;
  std::vector<CrystalNode> nodes;
  std::vector<CrystalEdge> edges;
  std::vector<std::vector<std::size_t>> f_next;
  std::vector<std::vector<std::size_t>> e_next;
  std::size_t seed = 0;
  bool truncated = false;
  std::optional<long> window;

  std::size_t size() const { return nodes.size(); }
  std::optional<std::size_t> find(std::string_view id) const;
  void rebuild_index();

 private:
  std::unordered_map<std::string, std::size_t> index_;
};

/// Element kinds the generic machinery works over.
template <class K>
concept CrystalKind = requires(const K& k, const typename K::Element& x, int i) {
  { k.labels() } -> std::convertible_to<int>;
  { k.key(x) } -> std::convertible_to<std::string>;
  { k.raise(x, i) } -> std::same_as<std::optional<typename K::Element>>;
  { k.lower(x, i) } -> std::same_as<std::optional<typename K::Element>>;
  { k.epsilon(x, i) } -> std::convertible_to<long>;
  { k.phi(x, i) } -> std::convertible_to<long>;
  { k.weight(x) } -> std::convertible_to<Weight>;
};

enum class Execution { Serial, Parallel };

struct GenerateOptions {
  /// Keeps only nodes whose weight has |δ-coordinate| ≤ window. Required
  /// for kinds with affine weights.
  std::optional<long> window;
  std::size_t node_cap = kDefaultNodeCap;
  Execution execution = Execution::Parallel;
};

/// A generated graph together with the elements behind its nodes.
template <CrystalKind K>
struct Realized {
  CrystalGraph graph;
  std::vector<typename K::Element> elements;
};

bool in_window(const Weight& w, const std::optional<long>& window);

namespace detail {

template <CrystalKind K>
struct Discovered {
  typename K::Element element;
  std::vector<std::optional<std::string>> f_key;
  std::vector<std::optional<std::string>> e_key;
};

template <CrystalKind K>
struct Expansion {
  std::vector<std::optional<typename K::Element>> lowered;
  std::vector<std::optional<typename K::Element>> raised;
  std::vector<std::optional<std::string>> f_key;
  std::vector<std::optional<std::string>> e_key;
};

template <CrystalKind K>
Expansion<K> expand(const K& kind, const typename K::Element& x) {
  const int n = kind.labels();
  Expansion<K> out;
  out.lowered.resize(n);
  out.raised.resize(n);
  out.f_key.resize(n);
  out.e_key.resize(n);
  for (int i = 0; i < n; ++i) {
    out.lowered[i] = kind.lower(x, i);
    if (out.lowered[i]) out.f_key[i] = kind.key(*out.lowered[i]);
    out.raised[i] = kind.raise(x, i);
    if (out.raised[i]) out.e_key[i] = kind.key(*out.raised[i]);
  }
  return out;
}

template <CrystalKind K>
Realized<K> finalize(const K& kind, std::map<std::string, Discovered<K>>& found,
                     const std::string& seed_key, bool truncated,
                     const GenerateOptions& opt) {
  Realized<K> out;
  CrystalGraph& g = out.graph;
  const int n = kind.labels();
  g.labels = n;
  g.window = opt.window;
  g.truncated = truncated;
  std::vector<Discovered<K>*> order;
  order.reserve(found.size());
  for (auto& [key, d] : found) {
    g.nodes.push_back({key, Weight(), {}, {}});
    order.push_back(&d);
  }
  g.rebuild_index();
  const long count = static_cast<long>(order.size());
  g.f_next.assign(order.size(), std::vector<std::size_t>(n, kNoNode));
  g.e_next.assign(order.size(), std::vector<std::size_t>(n, kNoNode));
  const bool par = opt.execution == Execution::Parallel;
#pragma omp parallel for schedule(dynamic) if (par)
  for (long v = 0; v < count; ++v) {
    const auto& x = order[v]->element;
    CrystalNode& node = g.nodes[v];
    node.wt = kind.weight(x);
    node.eps.resize(n);
    node.phi.resize(n);
    for (int i = 0; i < n; ++i) {
      node.eps[i] = kind.epsilon(x, i);
      node.phi[i] = kind.phi(x, i);
      if (const auto& k = order[v]->f_key[i]) {
        if (auto idx = g.find(*k)) g.f_next[v][i] = *idx;
      }
      if (const auto& k = order[v]->e_key[i]) {
        if (auto idx = g.find(*k)) g.e_next[v][i] = *idx;
      }
    }
  }
  for (std::size_t v = 0; v < order.size(); ++v)
    for (int i = 0; i < n; ++i)
      if (g.f_next[v][i] != kNoNode) g.edges.push_back({v, g.f_next[v][i], i});
  g.seed = *g.find(seed_key);
  out.elements.reserve(order.size());
  for (auto* d : order) out.elements.push_back(std::move(d->element));
  return out;
}

template <CrystalKind K>
void check_bound(const K& kind, const typename K::Element& seed, const GenerateOptions& opt) {
  const Weight w = kind.weight(seed);
  if (w.ambient() == Ambient::Affine && !opt.window)
    throw std::invalid_argument("generation of an affine crystal needs a window bound");
  if (!in_window(w, opt.window))
    throw std::invalid_argument("seed " + kind.key(seed) + " lies outside the window");
}

}  // namespace detail

/// Serial reference: plain FIFO breadth-first closure under all e_i, f_i.
template <CrystalKind K>
Realized<K> generate_serial(const K& kind, const typename K::Element& seed,
                            GenerateOptions opt = {}) {
  detail::check_bound(kind, seed, opt);
  opt.execution = Execution::Serial;
  std::map<std::string, detail::Discovered<K>> found;
  std::vector<std::string> queue;
  const std::string seed_key = kind.key(seed);
  found.emplace(seed_key, detail::Discovered<K>{seed, {}, {}});
  queue.push_back(seed_key);
  bool truncated = false;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto& entry = found.at(queue[head]);
    auto ex = detail::expand(kind, entry.element);
    entry.f_key = ex.f_key;
    entry.e_key = ex.e_key;
    for (int i = 0; i < kind.labels(); ++i) {
      for (auto* nb : {&ex.lowered[i], &ex.raised[i]}) {
        if (!*nb) continue;
        if (!in_window(kind.weight(**nb), opt.window)) {
          truncated = true;
          continue;
        }
        std::string k = kind.key(**nb);
        if (found.count(k)) continue;
        if (found.size() >= opt.node_cap)
          throw NodeCapExceeded("crystal generation exceeded the node cap of " +
                                std::to_string(opt.node_cap));
        found.emplace(k, detail::Discovered<K>{std::move(**nb), {}, {}});
        queue.push_back(std::move(k));
      }
    }
  }
  return detail::finalize(kind, found, seed_key, truncated, opt);
}

/// Level-synchronous closure. Each frontier is sorted by key and expanded in
/// parallel; the merge into the node set runs in frontier order, so the
/// result does not depend on scheduling or thread count.
template <CrystalKind K>
Realized<K> generate(const K& kind, const typename K::Element& seed, GenerateOptions opt = {}) {
  if (opt.execution == Execution::Serial) return generate_serial(kind, seed, opt);
  detail::check_bound(kind, seed, opt);
  std::map<std::string, detail::Discovered<K>> found;
  const std::string seed_key = kind.key(seed);
  found.emplace(seed_key, detail::Discovered<K>{seed, {}, {}});
  std::vector<std::string> frontier{seed_key};
  bool truncated = false;
  while (!frontier.empty()) {
    std::vector<detail::Expansion<K>> expanded(frontier.size());
    const long count = static_cast<long>(frontier.size());
#pragma omp parallel for schedule(dynamic)
    for (long f = 0; f < count; ++f)
      expanded[f] = detail::expand(kind, found.at(frontier[f]).element);

    std::map<std::string, typename K::Element> fresh;
    for (long f = 0; f < count; ++f) {
      auto& entry = found.at(frontier[f]);
      auto& ex = expanded[f];
      entry.f_key = ex.f_key;
      entry.e_key = ex.e_key;
      for (int i = 0; i < kind.labels(); ++i) {
        for (auto* nb : {&ex.lowered[i], &ex.raised[i]}) {
          if (!*nb) continue;
          if (!in_window(kind.weight(**nb), opt.window)) {
            truncated = true;
            continue;
          }
          std::string k = kind.key(**nb);
          if (found.count(k) || fresh.count(k)) continue;
          fresh.emplace(std::move(k), std::move(**nb));
        }
      }
    }
    if (found.size() + fresh.size() > opt.node_cap)
      throw NodeCapExceeded("crystal generation exceeded the node cap of " +
                            std::to_string(opt.node_cap));
    frontier.clear();
    for (auto& [k, x] : fresh) {
      found.emplace(k, detail::Discovered<K>{std::move(x), {}, {}});
      frontier.push_back(k);
    }
  }
  return detail::finalize(kind, found, seed_key, truncated, opt);
}

/// Graph on an explicit element list (which need not be connected); edges
/// leaving the list are dropped and mark the result as truncated.
template <CrystalKind K>
Realized<K> realize_all(const K& kind, const std::vector<typename K::Element>& elements,
                        GenerateOptions opt = {}) {
  if (elements.empty()) throw std::invalid_argument("realize_all needs at least one element");
  if (elements.size() > opt.node_cap)
    throw NodeCapExceeded("element list exceeds the node cap of " + std::to_string(opt.node_cap));
  std::map<std::string, detail::Discovered<K>> found;
  for (const auto& x : elements) found.emplace(kind.key(x), detail::Discovered<K>{x, {}, {}});
  std::vector<detail::Discovered<K>*> order;
  for (auto& [k, d] : found) order.push_back(&d);
  const long count = static_cast<long>(order.size());
  const bool par = opt.execution == Execution::Parallel;
  bool truncated = false;
#pragma omp parallel for schedule(dynamic) if (par) reduction(|| : truncated)
  for (long v = 0; v < count; ++v) {
    auto ex = detail::expand(kind, order[v]->element);
    for (int i = 0; i < kind.labels(); ++i) {
      if (ex.f_key[i] && !found.count(*ex.f_key[i])) truncated = true;
      if (ex.e_key[i] && !found.count(*ex.e_key[i])) truncated = true;
    }
    order[v]->f_key = std::move(ex.f_key);
    order[v]->e_key = std::move(ex.e_key);
  }
  return detail::finalize(kind, found, kind.key(elements.front()), truncated, opt);
}

/// b_1 ⊗ ... ⊗ b_n over registered finite crystals, with Kashiwara's rule:
/// r_k^i(b) = ε_i(b_k) − Σ_{j<k} ⟨α_i^∨, wt b_j⟩, ε_i(b) = max_k r_k^i(b),
/// e_i acts at the leftmost and f_i at the rightmost maximising position.
/// Pairings are read as φ_i − ε_i from the factor tables.
class TensorKind {
 public:
  using Element = std::vector<std::size_t>;

  explicit TensorKind(std::vector<const CrystalGraph*> factors);
  static TensorKind power(const CrystalGraph& g, int m);

  int labels() const { return labels_; }
  std::size_t arity() const { return factors_.size(); }
  const CrystalGraph& factor(std::size_t k) const { return *factors_[k]; }

  std::string key(const Element& x) const;
  Weight weight(const Element& x) const;
  long epsilon(const Element& x, int i) const;
  long phi(const Element& x, int i) const;
  std::optional<Element> raise(const Element& x, int i) const;
  std::optional<Element> lower(const Element& x, int i) const;

  /// Position (0-based) where e_i / f_i acts, whether or not the factor
  /// operator is null there.
  std::size_t raise_position(const Element& x, int i) const;
  std::size_t lower_position(const Element& x, int i) const;

  /// Seeds of every factor graph.
  Element seed() const;

 private:
  void check(const Element& x) const;
  std::vector<long> kashiwara_functions(const Element& x, int i) const;

  std::vector<const CrystalGraph*> factors_;
  int labels_ = 0;
};

/// B^ = B × Z: wt(b ⊗ t^n) = wt(b) + nδ and the 0-operators shift n by
/// ±1 (e_0 raises the degree, f_0 lowers it).
template <CrystalKind Base>
class AffinizedKind {
 public:
  struct Element {
    typename Base::Element base;
    long degree = 0;
  };

  explicit AffinizedKind(const Base& base) : base_(&base) {}

  const Base& base() const { return *base_; }
  int labels() const { return base_->labels(); }
  std::string key(const Element& x) const {
    return base_->key(x.base) + "@t^" + std::to_string(x.degree);
  }
  Weight weight(const Element& x) const {
    Weight w = base_->weight(x.base);
    if (w.ambient() != Ambient::Classical)
      throw AmbientMismatch("affinization needs a crystal with classical weights");
    return w.with_delta(Rational(x.degree));
  }
  long epsilon(const Element& x, int i) const { return base_->epsilon(x.base, i); }
  long phi(const Element& x, int i) const { return base_->phi(x.base, i); }
  std::optional<Element> raise(const Element& x, int i) const {
    auto b = base_->raise(x.base, i);
    if (!b) return std::nullopt;
    return Element{std::move(*b), x.degree + (i == 0 ? 1 : 0)};
  }
  std::optional<Element> lower(const Element& x, int i) const {
    auto b = base_->lower(x.base, i);
    if (!b) return std::nullopt;
    return Element{std::move(*b), x.degree - (i == 0 ? 1 : 0)};
  }

 private:
  const Base* base_;
};

/// Kind over an already generated finite graph (its tables drive the ops).
class GraphKind {
 public:
  using Element = std::size_t;
  explicit GraphKind(const CrystalGraph& g) : g_(&g) {}
  int labels() const { return g_->labels; }
  std::string key(Element x) const { return g_->nodes.at(x).id; }
  Weight weight(Element x) const { return g_->nodes.at(x).wt; }
  long epsilon(Element x, int i) const { return g_->nodes.at(x).eps.at(i); }
  long phi(Element x, int i) const { return g_->nodes.at(x).phi.at(i); }
  std::optional<Element> raise(Element x, int i) const {
    auto y = g_->e_next.at(x).at(i);
    return y == kNoNode ? std::nullopt : std::optional<Element>(y);
  }
  std::optional<Element> lower(Element x, int i) const {
    auto y = g_->f_next.at(x).at(i);
    return y == kNoNode ? std::nullopt : std::optional<Element>(y);
  }

 private:
  const CrystalGraph* g_;
};

/// Underlying undirected graph is connected (empty graphs are not).
bool is_connected(const CrystalGraph& g);

/// Indecomposability of an untruncated graph. Throws std::invalid_argument
/// on a truncated graph; use window_connected for those.
bool is_indecomposable(const CrystalGraph& g);

/// Connectivity of whatever part of the crystal the window kept.
bool window_connected(const CrystalGraph& g);

/// Normality: ε_i(b) equals the e_i-string length and φ_i(b) the f_i-string
/// length, for every node and label. Returns one line per violation.
std::vector<std::string> normality_audit(const CrystalGraph& g);

/// Every edge satisfies e_i(f_i x) = x and every e_i-arrow is an f_i-arrow
/// reversed.
std::vector<std::string> quasi_inverse_audit(const CrystalGraph& g);

/// Every i-labelled edge changes the weight by −α_i; also checks
/// φ_i − ε_i = ⟨α_i^∨, wt⟩ on every node.
std::vector<std::string> weight_audit(const CartanData& cd, const CrystalGraph& g);

/// Bijection g1 -> g2 preserving labelled edges, weights, ε and φ.
std::optional<std::vector<std::size_t>> isomorphic(const CrystalGraph& g1,
                                                   const CrystalGraph& g2);

/// Subgraph on the nodes with |δ-coordinate| ≤ radius; ids unchanged.
CrystalGraph restrict_window(const CrystalGraph& g, long radius);

/// Node ids as a sorted vector.
std::vector<std::string> node_ids(const CrystalGraph& g);

}  // namespace loom
