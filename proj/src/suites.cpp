#include "loom/suites.hpp"

#include <functional>
#include <map>

#include "loom/loop_embed.hpp"
#include "loom/sl2.hpp"

namespace loom {

namespace {

// Collects violations and turns them into a single check.
struct Tally {
  std::size_t count = 0;
  std::string first;
  void fail(const std::string& what) {
    if (count++ == 0) first = what;
  }
  void into(Report& rep, const std::string& name) const {
    rep.add(name, count == 0, count ? std::to_string(count) + " violations, first: " + first : "");
  }
};

template <class T>
bool same(const std::optional<T>& a, const std::optional<T>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || *a == *b;
}

void add_audit(Report& rep, const std::string& name, const std::vector<std::string>& lines) {
  rep.add(name, lines.empty(),
          lines.empty() ? "" : std::to_string(lines.size()) + " violations, first: " + lines.front());
}

bool same_graph(const CrystalGraph& a, const CrystalGraph& b) {
  if (node_ids(a) != node_ids(b) || a.edges != b.edges || a.seed != b.seed ||
      a.truncated != b.truncated)
    return false;
  for (std::size_t v = 0; v < a.size(); ++v)
    if (a.nodes[v].wt != b.nodes[v].wt || a.nodes[v].eps != b.nodes[v].eps ||
        a.nodes[v].phi != b.nodes[v].phi)
      return false;
  return true;
}

struct Setup {
  CartanData cd;
  PathKind kind;
  Realized<PathKind> b;

  explicit Setup(const SuiteConfig& cfg)
      : cd(CartanData::build(cfg.type, cfg.rank)),
        kind(cd),
        b(fundamental_crystal(kind, cfg.i, cfg.execution, cfg.node_cap)) {}
  Setup(const Setup&) = delete;

  // B(ϖ_i) elements plus every concatenation of two of them, with grids.
  std::vector<std::pair<Path, long>> sample_paths() const {
    const long n = choose_N(b.elements);
    std::vector<std::pair<Path, long>> out;
    for (const auto& p : b.elements) out.emplace_back(p, n);
    for (const auto& p : b.elements)
      for (const auto& q : b.elements) out.emplace_back(concat({p, q}), 2 * n);
    return out;
  }
};

TensorKind::Element decode(std::size_t code, std::size_t n, int m) {
  TensorKind::Element x(static_cast<std::size_t>(m));
  for (int k = m - 1; k >= 0; --k) {
    x[k] = code % n;
    code /= n;
  }
  return x;
}

std::size_t count_power(std::size_t n, int m) {
  std::size_t total = 1;
  for (int k = 0; k < m; ++k) total *= n;
  return total;
}

Report suite_normality(const SuiteConfig& cfg) {
  Report rep;
  Setup s(cfg);
  add_audit(rep, "B/normality", normality_audit(s.b.graph));
  add_audit(rep, "B/quasi_inverse", quasi_inverse_audit(s.b.graph));
  add_audit(rep, "B/weight", weight_audit(s.cd, s.b.graph));
  rep.add("B/indecomposable", is_indecomposable(s.b.graph));
  {
    auto serial = generate_serial(s.kind, s.b.elements[s.b.graph.seed]);
    rep.add("B/serial_matches_parallel", same_graph(serial.graph, s.b.graph));
  }
  for (int p = 2; p <= cfg.m; ++p) {
    const std::string tag = "B^" + std::to_string(p) + "/";
    const TensorKind t = TensorKind::power(s.b.graph, p);
    GenerateOptions opt;
    opt.execution = cfg.execution;
    opt.node_cap = cfg.node_cap;
    auto g = generate(t, t.seed(), opt);
    rep.add(tag + "connected", g.graph.size() == count_power(s.b.graph.size(), p),
            std::to_string(g.graph.size()) + " nodes");
    add_audit(rep, tag + "normality", normality_audit(g.graph));
    add_audit(rep, tag + "quasi_inverse", quasi_inverse_audit(g.graph));
    add_audit(rep, tag + "weight", weight_audit(s.cd, g.graph));
    opt.execution = Execution::Serial;
    rep.add(tag + "serial_matches_parallel", same_graph(generate(t, t.seed(), opt).graph, g.graph));
  }
  return rep;
}

Report suite_weyl(const SuiteConfig& cfg) {
  Report rep;
  Setup s(cfg);
  Tally involution, linear;
  for (const auto& [p, grid] : s.sample_paths()) {
    for (int j = 0; j < s.cd.size(); ++j) {
      const Path w = weyl_act(s.cd, p, j);
      if (!(weyl_act(s.cd, w, j) == p)) involution.fail("s_" + std::to_string(j) + " on " + p.key());
      if (p.segments().size() == 1) {
        const Weight lam = p.endpoint();
        if (!(w == Path::linear(s.cd.reflect(j, lam))))
          linear.fail("s_" + std::to_string(j) + " on π_" + lam.key());
      }
    }
  }
  involution.into(rep, "weyl_involution");
  linear.into(rep, "weyl_linear");
  Tally zero;
  const Path p0 = Path::constant(s.cd.size(), Ambient::Classical);
  for (int j = 0; j < s.cd.size(); ++j)
    if (!(weyl_act(s.cd, p0, j) == p0)) zero.fail("s_" + std::to_string(j));
  zero.into(rep, "weyl_constant");
  return rep;
}

Report suite_stretch(const SuiteConfig& cfg) {
  Report rep;
  Setup s(cfg);
  Tally law, stats, linear, segmentation, sum, round_trip;
  for (const auto& [p, grid] : s.sample_paths()) {
    for (long n = 1; n <= 3; ++n) {
      const Path sp = stretch(p, n);
      if (p.segments().size() == 1 && !(sp == Path::linear(p.endpoint() * Rational(n))))
        linear.fail(p.key());
      for (int j = 0; j < s.cd.size(); ++j) {
        if (epsilon(s.cd, sp, j) != n * epsilon(s.cd, p, j) || phi(s.cd, sp, j) != n * phi(s.cd, p, j))
          stats.fail(p.key());
        for (bool up : {true, false}) {
          auto one = up ? raise(s.cd, p, j) : lower(s.cd, p, j);
          std::optional<Path> lhs;
          if (one) lhs = stretch(*one, n);
          std::optional<Path> rhs = sp;
          for (long k = 0; k < n && rhs; ++k) rhs = up ? raise(s.cd, *rhs, j) : lower(s.cd, *rhs, j);
          if (!same(lhs, rhs))
            law.fail(std::string(up ? "e_" : "f_") + std::to_string(j) + " on " + p.key());
        }
      }
    }
    const auto nu = segment_uniform(p, grid);
    if (!(from_uniform(nu) == p)) round_trip.fail(p.key());
    for (int j = 0; j < s.cd.size(); ++j) {
      auto up = raise(s.cd, p, j);
      if (!up) continue;
      const Extrema ex = h_extrema(s.cd, p, j);
      const Rational k = *ex.e_minus * Rational(grid), l = *ex.e_plus * Rational(grid);
      if (!is_integer(k) || !is_integer(l)) {
        segmentation.fail("e_" + std::to_string(j) + " breakpoints off grid on " + p.key());
        continue;
      }
      const long kk = to_long(k), ll = to_long(l);
      const auto after = segment_uniform(*up, grid);
      Rational total = 0;
      for (long r = 0; r < grid; ++r) {
        const bool inside = r >= kk && r < ll;
        const Weight expect = inside ? s.cd.reflect(j, nu[r]) : nu[r];
        if (after[r] != expect) segmentation.fail("e_" + std::to_string(j) + " on " + p.key());
        if (inside) total += s.cd.pairing(j, nu[r]);
      }
      if (total != Rational(-grid)) sum.fail("e_" + std::to_string(j) + " on " + p.key());
    }
  }
  law.into(rep, "stretch_law");
  stats.into(rep, "stretch_scales_eps_phi");
  linear.into(rep, "stretch_linear");
  round_trip.into(rep, "segment_round_trip");
  segmentation.into(rep, "segmentation_reflection");
  sum.into(rep, "segmentation_sum");
  return rep;
}

void check_concat_power(const Setup& s, int p, Report& rep) {
  const TensorKind t = TensorKind::power(s.b.graph, p);
  const std::size_t n = s.b.graph.size();
  Tally ops, stats;
  for (std::size_t code = 0; code < count_power(n, p); ++code) {
    const auto x = decode(code, n, p);
    std::vector<Path> parts;
    for (auto f : x) parts.push_back(s.b.elements[f]);
    const Path c = concat(parts);
    for (int j = 0; j < s.cd.size(); ++j) {
      if (epsilon(s.cd, c, j) != t.epsilon(x, j) || phi(s.cd, c, j) != t.phi(x, j))
        stats.fail(t.key(x));
      for (bool up : {true, false}) {
        auto y = up ? t.raise(x, j) : t.lower(x, j);
        std::optional<Path> lhs;
        if (y) {
          std::vector<Path> q;
          for (auto f : *y) q.push_back(s.b.elements[f]);
          lhs = concat(q);
        }
        auto rhs = up ? raise(s.cd, c, j) : lower(s.cd, c, j);
        if (!same(lhs, rhs)) ops.fail(std::string(up ? "e_" : "f_") + std::to_string(j) + " on " + t.key(x));
      }
    }
  }
  const std::string tag = "power" + std::to_string(p) + "/";
  ops.into(rep, tag + "concat_matches_tensor_rule");
  stats.into(rep, tag + "concat_eps_phi");
}

Report suite_concat(const SuiteConfig& cfg) {
  Report rep;
  Setup s(cfg);
  for (int p = 2; p <= std::max(cfg.m, 2); ++p) check_concat_power(s, p, rep);

  // (b1 ⊗ b2) ⊗ b3 and b1 ⊗ (b2 ⊗ b3) against the flat triple rule.
  const TensorKind pair = TensorKind::power(s.b.graph, 2);
  GenerateOptions opt;
  opt.execution = cfg.execution;
  const auto g2 = generate(pair, pair.seed(), opt);
  const TensorKind left({&g2.graph, &s.b.graph}), right({&s.b.graph, &g2.graph});
  const TensorKind flat = TensorKind::power(s.b.graph, 3);
  Tally assoc;
  auto flatten_key = [](const TensorKind& k, const std::optional<TensorKind::Element>& y) {
    return y ? std::optional<std::string>(k.key(*y)) : std::nullopt;
  };
  for (std::size_t u = 0; u < g2.graph.size(); ++u)
    for (std::size_t c = 0; c < s.b.graph.size(); ++c) {
      const TensorKind::Element xl{u, c}, xr{c, u};
      const TensorKind::Element fl{g2.elements[u][0], g2.elements[u][1], c};
      const TensorKind::Element fr{c, g2.elements[u][0], g2.elements[u][1]};
      for (int j = 0; j < s.cd.size(); ++j) {
        if (left.epsilon(xl, j) != flat.epsilon(fl, j) || left.phi(xl, j) != flat.phi(fl, j) ||
            right.epsilon(xr, j) != flat.epsilon(fr, j) || right.phi(xr, j) != flat.phi(fr, j))
          assoc.fail(flat.key(fl));
        if (!same(flatten_key(left, left.raise(xl, j)), flatten_key(flat, flat.raise(fl, j))) ||
            !same(flatten_key(left, left.lower(xl, j)), flatten_key(flat, flat.lower(fl, j))) ||
            !same(flatten_key(right, right.raise(xr, j)), flatten_key(flat, flat.raise(fr, j))) ||
            !same(flatten_key(right, right.lower(xr, j)), flatten_key(flat, flat.lower(fr, j))))
          assoc.fail(flat.key(fl) + " label " + std::to_string(j));
      }
    }
  assoc.into(rep, "tensor_associativity");
  return rep;
}

Report suite_xi(const SuiteConfig& cfg) {
  Report rep;
  Setup s(cfg);
  LoopEmbedding emb(s.cd, cfg.i, cfg.m, cfg.execution);
  GenerateOptions opt;
  opt.window = cfg.window;
  opt.execution = cfg.execution;
  opt.node_cap = cfg.node_cap;
  Tally ops, stats, linear;
  for (long n = 0; n < cfg.m; ++n) {
    auto piece = generate(s.kind, emb.highest_path(n), opt);
    for (const auto& p : piece.elements) {
      if (std::abs(to_long(p.endpoint().delta_or_zero())) > cfg.window - 1) continue;
      const Path xp = project(p);
      if (p.segments().size() == 1 && !(xp == Path::linear(s.cd.classical_project(p.endpoint()))))
        linear.fail(p.key());
      for (int j = 0; j < s.cd.size(); ++j) {
        if (epsilon(s.cd, p, j) != epsilon(s.cd, xp, j) || phi(s.cd, p, j) != phi(s.cd, xp, j))
          stats.fail(p.key());
        for (bool up : {true, false}) {
          auto y = up ? raise(s.cd, p, j) : lower(s.cd, p, j);
          std::optional<Path> lhs;
          if (y) lhs = project(*y);
          auto rhs = up ? raise(s.cd, xp, j) : lower(s.cd, xp, j);
          if (!same(lhs, rhs)) ops.fail(std::string(up ? "e_" : "f_") + std::to_string(j) + " on " + p.key());
        }
      }
    }
  }
  ops.into(rep, "xi_commutes_with_operators");
  stats.into(rep, "xi_preserves_eps_phi");
  linear.into(rep, "xi_linear");
  return rep;
}

Report suite_energy(const SuiteConfig& cfg) {
  Report rep;
  Setup s(cfg);
  const long N = choose_N(s.b.elements);
  EnergyTable t;
  try {
    t = energy_table(s.b.graph, N);
    rep.add("recursion_consistent", true);
  } catch (const Error& err) {
    rep.add("recursion_consistent", false, err.what());
    return rep;
  }
  const std::size_t n = s.b.graph.size();
  rep.add("normalized", t.at(s.b.graph.seed, s.b.graph.seed) == 0);
  bool nonneg = true;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) nonneg = nonneg && t.at(a, b) >= 0;
  rep.add("chi_nonnegative", nonneg);

  bool stable = true;
  for (std::uint64_t seed = 1; seed <= 20; ++seed)
    stable = stable && energy_table(s.b.graph, N, seed).chi == t.chi;
  rep.add("randomized_bfs_20_seeds", stable);

  const long bound = coroot_grid_bound(s.cd);
  rep.add("grid_divides_coroot_bound", bound % N == 0,
          "N = " + std::to_string(N) + ", coroot bound " + std::to_string(bound));

  if (s.cd.type_label() == "A" && cfg.i == 1) {
    // χ(b ⊗ b') = 0 must itself be a total preorder.
    bool ok = true;
    for (std::size_t a = 0; a < n; ++a) {
      ok = ok && t.at(a, a) == 0;
      for (std::size_t b = 0; b < n; ++b) {
        ok = ok && (t.at(a, b) == 0 || t.at(b, a) == 0);
        for (std::size_t c = 0; c < n; ++c)
          if (t.at(a, b) == 0 && t.at(b, c) == 0) ok = ok && t.at(a, c) == 0;
      }
    }
    rep.add("total_preorder", ok);
  }

  Tally members;
  const TensorKind pair = TensorKind::power(s.b.graph, 2);
  for (std::size_t code = 0; code < n * n; ++code) {
    try {
      refine(s.b, decode(code, n, 2), N);
    } catch (const Error& err) {
      members.fail(err.what());
    }
  }
  members.into(rep, "refinement_in_crystal");
  return rep;
}

Report suite_maj(const SuiteConfig& cfg) {
  Report rep;
  const CartanData cd = CartanData::build(cfg.type, cfg.rank);
  for (int p = 2; p <= std::max(cfg.m, 2); ++p) {
    LoopEmbedding emb(cd, cfg.i, p, cfg.execution);
    const auto& t = emb.tensor();
    const std::size_t n = emb.fundamental().graph.size();
    const long N = emb.N();
    Tally shift, kap;
    for (std::size_t code = 0; code < count_power(n, p); ++code) {
      const auto b = decode(code, n, p);
      const long base = emb.maj_of(b);
      for (int j = 0; j < cd.size(); ++j) {
        const long d = j == 0 ? N : 0;
        if (auto y = t.lower(b, j); y && ((emb.maj_of(*y) - base - d) % p) != 0)
          shift.fail("f_" + std::to_string(j) + " on " + t.key(b));
        if (auto y = t.raise(b, j); y && ((emb.maj_of(*y) - base + d) % p) != 0)
          shift.fail("e_" + std::to_string(j) + " on " + t.key(b));
      }
      for (long deg = -cfg.window; deg <= cfg.window; ++deg) {
        if (emb.kappa(b, deg, 0) != 0 || emb.kappa(b, deg, emb.L()) != Rational(deg))
          kap.fail(t.key(b) + " at degree " + std::to_string(deg));
      }
    }
    const std::string tag = "m" + std::to_string(p) + "/";
    shift.into(rep, tag + "maj_shift");
    kap.into(rep, tag + "kappa_endpoints");
  }
  return rep;
}

Report suite_psi(const SuiteConfig& cfg) {
  Report rep;
  const CartanData cd = CartanData::build(cfg.type, cfg.rank);
  LoopEmbedding emb(cd, cfg.i, cfg.m, cfg.execution);
  const auto xs = emb.window_elements(cfg.window);
  const auto par = emb.psi_all(xs, Execution::Parallel);
  const auto ser = emb.psi_all(xs, Execution::Serial);
  bool same_images = par.size() == ser.size();
  for (std::size_t k = 0; same_images && k < par.size(); ++k)
    same_images = par[k].path == ser[k].path && par[k].kappas == ser[k].kappas;
  rep.add("serial_matches_parallel", same_images);
  const Report full = verify_decomposition(cd, cfg.i, cfg.m, cfg.window, cfg.execution, cfg.node_cap);
  for (const auto& c : full.checks)
    if (c.name.rfind("psi_", 0) == 0 || c.name == "kappa_endpoints" || c.name == "projection_law" ||
        c.name == "highest_weight_images" || c.name == "classes_closed")
      rep.checks.push_back(c);
  return rep;
}

Report suite_decompose(const SuiteConfig& cfg) {
  const CartanData cd = CartanData::build(cfg.type, cfg.rank);
  return verify_decomposition(cd, cfg.i, cfg.m, cfg.window, cfg.execution, cfg.node_cap);
}

Report suite_sl2(const SuiteConfig& cfg) {
  Report rep;
  if (cfg.t1 < 0 || cfg.t2 < 0) throw std::invalid_argument("t1 and t2 must be nonnegative");
  rep.merge(sl2::verify_lemma(cfg.t1, cfg.t2), "lemma/");
  rep.merge(sl2::verify_relations({cfg.t1, cfg.t2}), "relations/");
  rep.merge(sl2::verify_coassociativity({1, 1, 1}));
  rep.merge(sl2::verify_coassociativity({2, 1, 1}));
  rep.merge(sl2::verify_qbinom(8));
  return rep;
}

using SuiteFn = std::function<Report(const SuiteConfig&)>;

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> r{
      {"normality", suite_normality}, {"weyl", suite_weyl},   {"stretch", suite_stretch},
      {"concat", suite_concat},       {"xi", suite_xi},       {"energy", suite_energy},
      {"maj", suite_maj},             {"psi", suite_psi},     {"decompose", suite_decompose},
      {"sl2", suite_sl2}};
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"normality", "weyl", "stretch", "concat", "xi",
                                              "energy",    "maj",  "psi",     "decompose", "sl2"};
  return names;
}

Report run_suite(const std::string& name, const SuiteConfig& cfg) {
  if (name == "all") {
    Report rep;
    for (const auto& n : suite_names()) rep.merge(registry().at(n)(cfg), n + "/");
    return rep;
  }
  auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown suite \"" + name + "\"");
  return it->second(cfg);
}

}  // namespace loom
