#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <set>

#include "loom/path_crystal.hpp"

using namespace loom;

namespace {

const CartanData& a1() {
  static const auto cd = CartanData::build("A", 1);
  return cd;
}

const CartanData& a2() {
  static const auto cd = CartanData::build("A", 2);
  return cd;
}

std::set<std::tuple<std::string, int, std::string>> labelled_edges(const CrystalGraph& g) {
  std::set<std::tuple<std::string, int, std::string>> out;
  for (const auto& e : g.edges) out.emplace(g.nodes[e.src].id, e.label, g.nodes[e.dst].id);
  return out;
}

CrystalGraph disjoint_union(const CrystalGraph& g) {
  CrystalGraph u = g;
  const std::size_t n = g.size();
  for (std::size_t v = 0; v < n; ++v) {
    auto node = g.nodes[v];
    node.id += "'";
    u.nodes.push_back(node);
    auto f = g.f_next[v], e = g.e_next[v];
    for (auto& x : f)
      if (x != kNoNode) x += n;
    for (auto& x : e)
      if (x != kNoNode) x += n;
    u.f_next.push_back(f);
    u.e_next.push_back(e);
  }
  for (const auto& e : g.edges) u.edges.push_back({e.src + n, e.dst + n, e.label});
  u.rebuild_index();
  return u;
}

}  // namespace

TEST_CASE("A1 fundamental crystal") {
  const PathKind kind(a1());
  const auto b = fundamental_crystal(kind, 1);
  REQUIRE(b.graph.size() == 2);
  const Path plus = Path::linear(a1().classical_fundamental(1)), minus = Path::linear(-a1().classical_fundamental(1));
  CHECK(labelled_edges(b.graph) == std::set<std::tuple<std::string, int, std::string>>{
                                       {plus.key(), 1, minus.key()}, {minus.key(), 0, plus.key()}});
  CHECK(b.elements[b.graph.seed] == plus);
}

TEST_CASE("A2 fundamental crystal is one 3-cycle") {
  const PathKind kind(a2());
  const auto b = fundamental_crystal(kind, 1);
  REQUIRE(b.graph.size() == 3);
  REQUIRE(b.graph.edges.size() == 3);
  std::set<int> labels;
  std::size_t v = b.graph.seed;
  for (int step = 0; step < 3; ++step) {
    int out = 0;
    for (int i = 0; i < 3; ++i)
      if (b.graph.f_next[v][i] != kNoNode) {
        ++out;
        labels.insert(i);
      }
    REQUIRE(out == 1);
    for (int i = 0; i < 3; ++i)
      if (b.graph.f_next[v][i] != kNoNode) {
        v = b.graph.f_next[v][i];
        break;
      }
  }
  CHECK(v == b.graph.seed);
  CHECK(labels == std::set<int>{0, 1, 2});
}

TEST_CASE("the zero path generates a single node") {
  const PathKind kind(a2());
  const auto g = generate(kind, Path::constant(3, Ambient::Classical));
  CHECK(g.graph.size() == 1);
  CHECK(g.graph.edges.empty());
}

TEST_CASE("C2 vector representation") {
  const auto cd = CartanData::build("C", 2);
  const PathKind kind(cd);
  const auto b = fundamental_crystal(kind, 1);
  CHECK(b.graph.size() == 4);
  CHECK(normality_audit(b.graph).empty());
}

TEST_CASE("tensor rule on A1") {
  const PathKind kind(a1());
  const auto b = fundamental_crystal(kind, 1);
  const std::size_t p = b.graph.seed, m = 1 - p;
  const TensorKind t = TensorKind::power(b.graph, 2);
  CHECK(t.lower({p, p}, 1) == TensorKind::Element{m, p});
  CHECK(t.raise({p, p}, 0) == TensorKind::Element{p, m});
  CHECK(t.lower_position({p, p}, 1) == 0);
  CHECK(t.raise_position({p, p}, 0) == 1);
}

TEST_CASE("affinization shifts the degree on label 0 only") {
  const PathKind kind(a1());
  const auto b = fundamental_crystal(kind, 1);
  const std::size_t p = b.graph.seed, m = 1 - p;
  const TensorKind t = TensorKind::power(b.graph, 2);
  const AffinizedKind<TensorKind> aff(t);
  auto x = aff.raise({{p, m}, 0}, 0);
  REQUIRE(x);
  CHECK(x->base == TensorKind::Element{m, m});
  CHECK(x->degree == 1);
  auto y = aff.lower({{p, p}, 4}, 1);
  REQUIRE(y);
  CHECK(y->degree == 4);
  auto z = aff.lower(*x, 0);
  REQUIRE(z);
  CHECK(z->degree == 0);
  CHECK(aff.weight({{p, p}, 3}).delta_or_zero() == 3);
}

TEST_CASE("connectivity") {
  const PathKind kind(a1());
  const auto b = fundamental_crystal(kind, 1);
  CHECK(is_connected(b.graph));
  CHECK(is_indecomposable(b.graph));
  CHECK_FALSE(is_connected(disjoint_union(b.graph)));
  const TensorKind t = TensorKind::power(b.graph, 2);
  const auto g = generate(t, t.seed());
  CHECK(g.graph.size() == 4);
  CHECK(is_connected(g.graph));
}

TEST_CASE("isomorphism") {
  const auto b1 = fundamental_crystal(PathKind(a1()), 1);
  const auto b2 = fundamental_crystal(PathKind(a2()), 1);
  CHECK_FALSE(isomorphic(b1.graph, b2.graph));

  const TensorKind t = TensorKind::power(b2.graph, 2);
  const auto g = generate(t, t.seed()).graph;
  // Same crystal with the tensor factors generated in another order.
  const TensorKind swapped({&b2.graph, &b2.graph});
  auto h = generate(swapped, {b2.graph.seed, b2.graph.seed}).graph;
  auto map = isomorphic(g, h);
  REQUIRE(map);
  for (const auto& e : g.edges) CHECK(h.f_next[(*map)[e.src]][e.label] == (*map)[e.dst]);

  CHECK_FALSE(isomorphic(g, disjoint_union(b2.graph)));
}

TEST_CASE("audits") {
  const auto b = fundamental_crystal(PathKind(a1()), 1);
  CHECK(normality_audit(b.graph).empty());
  CHECK(quasi_inverse_audit(b.graph).empty());
  CHECK(weight_audit(a1(), b.graph).empty());

  const auto b2 = fundamental_crystal(PathKind(a2()), 1);
  const TensorKind t = TensorKind::power(b2.graph, 2);
  const auto g = generate(t, t.seed()).graph;
  CHECK(normality_audit(g).empty());
  CHECK(weight_audit(a2(), g).empty());

  CrystalGraph bad = b.graph;
  bad.nodes[0].eps[1] += 1;
  CHECK(normality_audit(bad).size() == 1);
}

TEST_CASE("serial and parallel generation agree") {
  const auto b = fundamental_crystal(PathKind(a2()), 1);
  const TensorKind t = TensorKind::power(b.graph, 3);
  GenerateOptions opt;
  opt.execution = Execution::Serial;
  const auto s = generate(t, t.seed(), opt).graph;
  opt.execution = Execution::Parallel;
  const auto p = generate(t, t.seed(), opt).graph;
  CHECK(s.size() == 27);
  CHECK(node_ids(s) == node_ids(p));
  CHECK(s.edges == p.edges);
}

TEST_CASE("windowed affine generation") {
  const auto& cd = a1();
  const PathKind kind(cd);
  GenerateOptions opt;
  opt.window = 3;
  const Weight lam = Rational(2) * cd.classical_fundamental(1, Ambient::Affine) + cd.delta();
  const auto g = generate(kind, Path::linear(lam), opt);
  CHECK(g.graph.truncated);
  for (const auto& p : g.elements) CHECK(abs(p.endpoint().delta_or_zero()) <= 3);
  CHECK(window_connected(g.graph));
  opt.window.reset();
  CHECK_THROWS(generate(kind, Path::linear(lam), opt));
}

TEST_CASE("node cap") {
  const auto b = fundamental_crystal(PathKind(a2()), 1);
  const TensorKind t = TensorKind::power(b.graph, 3);
  GenerateOptions opt;
  opt.node_cap = 10;
  CHECK_THROWS_AS(generate(t, t.seed(), opt), NodeCapExceeded);
  opt.execution = Execution::Serial;
  CHECK_THROWS_AS(generate(t, t.seed(), opt), NodeCapExceeded);

  setenv("LOOM_NODE_CAP", "123", 1);
  CHECK(node_cap_from_env() == 123);
  setenv("LOOM_NODE_CAP", "12x", 1);
  CHECK_THROWS_AS(node_cap_from_env(), std::invalid_argument);
  unsetenv("LOOM_NODE_CAP");
  CHECK(node_cap_from_env() == kDefaultNodeCap);
}

TEST_CASE("realizing an explicit element list") {
  const auto b = fundamental_crystal(PathKind(a1()), 1);
  const TensorKind t = TensorKind::power(b.graph, 1);
  const AffinizedKind<TensorKind> aff(t);
  std::vector<AffinizedKind<TensorKind>::Element> xs;
  for (long d = -2; d <= 2; ++d)
    for (std::size_t v = 0; v < 2; ++v) xs.push_back({{v}, d});
  const auto r = realize_all(aff, xs);
  CHECK(r.graph.size() == 10);
  CHECK(r.graph.truncated);
  CHECK(r.graph.edges.size() == 9);
}
