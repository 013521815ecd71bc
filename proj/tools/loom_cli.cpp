#include <CLI11.hpp>
#include <omp.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "loom/loop_embed.hpp"
#include "loom/path_crystal.hpp"
#include "loom/serialize.hpp"
#include "loom/sl2.hpp"
#include "loom/suites.hpp"

namespace {

using namespace loom;

enum Exit { kOk = 0, kFailed = 1, kInvalid = 2, kNodeCap = 3 };

struct RunConfig {
  std::string type = "A";
  int rank = 1;
  int i = 1;
  int m = 1;
  long window = 3;
  std::string format = "json";
  std::string out;
  int threads = 0;
  std::size_t node_cap = kDefaultNodeCap;

  std::string ambient = "classical";
  bool ls = false;
  std::string weight;

  std::string suite;
  std::string target;
  bool json = false;
  int t1 = 1;
  int t2 = 1;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Writes to a sibling temp file and renames over the target.
void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  const std::filesystem::path target(cfg.out);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw ConfigError("cannot write " + tmp.string());
    f << text;
    if (!f.flush()) throw ConfigError("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void check_common(const RunConfig& cfg) {
  if (cfg.format != "json" && cfg.format != "dot" && cfg.format != "summary")
    throw ConfigError("--format must be json, dot or summary");
  if (cfg.threads < 0) throw ConfigError("--threads must be nonnegative");
  if (cfg.m < 1) throw ConfigError("tensor power must be at least 1");
  if (cfg.node_cap == 0) throw ConfigError("node cap must be positive");
}

CartanData cartan_of(const RunConfig& cfg) {
  CartanData cd = CartanData::build(cfg.type, cfg.rank);
  if (cfg.i < 1 || cfg.i > cd.rank())
    throw ConfigError("--i must lie in 1.." + std::to_string(cd.rank()));
  return cd;
}

std::string render(const RunConfig& cfg, const CrystalGraph& g) {
  if (cfg.format == "dot") return to_dot(g);
  if (cfg.format == "summary") return summary(g);
  return dump(to_json(g));
}

int cmd_gen(const RunConfig& cfg) {
  const CartanData cd = cartan_of(cfg);
  const PathKind kind(cd);
  GenerateOptions opt;
  opt.node_cap = cfg.node_cap;

  if (cfg.ls) {
    if (cfg.weight.empty()) throw ConfigError("--ls needs --weight");
    const Weight lam = parse_weight_literal(cd, cfg.weight, cfg.ambient == "affine");
    if (lam.ambient() == Ambient::Affine) {
      if (cfg.window < 2) throw ConfigError("--window must be at least 2 for affine generation");
      opt.window = cfg.window;
    }
    emit(cfg, render(cfg, generate(kind, Path::linear(lam), opt).graph));
    return kOk;
  }

  const auto b = fundamental_crystal(kind, cfg.i, Execution::Parallel, cfg.node_cap);
  if (cfg.ambient == "classical") {
    if (cfg.m == 1) {
      emit(cfg, render(cfg, b.graph));
      return kOk;
    }
    const TensorKind t = TensorKind::power(b.graph, cfg.m);
    emit(cfg, render(cfg, generate(t, t.seed(), opt).graph));
    return kOk;
  }
  if (cfg.ambient != "affine") throw ConfigError("--ambient must be classical or affine");
  if (cfg.window < 2) throw ConfigError("--window must be at least 2 for affine generation");
  const TensorKind t = TensorKind::power(b.graph, cfg.m);
  const AffinizedKind<TensorKind> aff(t);
  std::vector<AffinizedKind<TensorKind>::Element> xs;
  const std::size_t n = b.graph.size();
  std::size_t total = 1;
  for (int k = 0; k < cfg.m; ++k) total *= n;
  if (total * static_cast<std::size_t>(2 * cfg.window + 1) > cfg.node_cap)
    throw NodeCapExceeded("affinized window exceeds the node cap of " + std::to_string(cfg.node_cap));
  for (std::size_t code = 0; code < total; ++code) {
    TensorKind::Element x(static_cast<std::size_t>(cfg.m));
    std::size_t c = code;
    for (int k = cfg.m - 1; k >= 0; --k) {
      x[k] = c % n;
      c /= n;
    }
    for (long d = -cfg.window; d <= cfg.window; ++d) xs.push_back({x, d});
  }
  auto g = realize_all(aff, xs, opt).graph;
  g.window = cfg.window;
  emit(cfg, render(cfg, g));
  return kOk;
}

Json limit_table_json(int t1, int t2) {
  auto idx = [](const std::optional<sl2::Index>& x) { return x ? Json(*x) : Json(nullptr); };
  Json rows = Json::array();
  for (const auto& r : sl2::crystal_limit_table(t1, t2))
    rows.push_back({{"source", r.source},
                    {"e_exact", idx(r.e_exact)},
                    {"f_exact", idx(r.f_exact)},
                    {"e_lemma", idx(r.e_lemma)},
                    {"f_lemma", idx(r.f_lemma)},
                    {"e_rule", idx(r.e_rule)},
                    {"f_rule", idx(r.f_rule)},
                    {"lattice", r.lattice}});
  return rows;
}

int cmd_verify(RunConfig cfg) {
  std::string suite = cfg.suite;
  if (!cfg.target.empty()) {
    if (!suite.empty()) throw ConfigError("give either --suite or a target, not both");
    if (cfg.target == "psi-decomposition")
      suite = "decompose";
    else if (cfg.target == "sl2-lemma")
      suite = "sl2-lemma";
    else
      throw ConfigError("unknown verify target \"" + cfg.target + "\"");
  }
  if (suite.empty()) throw ConfigError("verify needs --suite or a target");
  if (cfg.json) cfg.format = "json";
  if (cfg.format == "dot") throw ConfigError("verify reports are json or summary");

  Report rep;
  Json extra;
  if (suite == "sl2-lemma") {
    if (cfg.t1 < 0 || cfg.t2 < 0) throw ConfigError("--t1 and --t2 must be nonnegative");
    rep = sl2::verify_lemma(cfg.t1, cfg.t2);
    extra = limit_table_json(cfg.t1, cfg.t2);
  } else {
    const auto& names = suite_names();
    if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end())
      throw ConfigError("unknown suite \"" + suite + "\"");
    if (suite != "sl2") cartan_of(cfg);
    if ((suite == "decompose" || suite == "psi" || suite == "xi" || suite == "all") && cfg.window < 2)
      throw ConfigError("--window must be at least 2");
    SuiteConfig sc;
    sc.type = cfg.type;
    sc.rank = cfg.rank;
    sc.i = cfg.i;
    sc.m = cfg.m;
    sc.window = cfg.window;
    sc.t1 = cfg.t1;
    sc.t2 = cfg.t2;
    sc.node_cap = cfg.node_cap;
    rep = run_suite(suite, sc);
  }

  if (cfg.format == "summary") {
    emit(cfg, summary(rep));
  } else {
    Json j = to_json(rep);
    if (!extra.is_null()) j["table"] = extra;
    emit(cfg, dump(j));
  }
  if (!rep.ok()) {
    for (const auto& c : rep.checks)
      if (!c.pass) std::cerr << "FAIL " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    return kFailed;
  }
  return kOk;
}

int cmd_energy(const RunConfig& cfg) {
  const CartanData cd = cartan_of(cfg);
  const PathKind kind(cd);
  const auto b = fundamental_crystal(kind, cfg.i, Execution::Parallel, cfg.node_cap);
  const EnergyTable t = energy_table(b.graph, choose_N(b.elements));
  const std::string id = cd.type_label() + std::to_string(cd.rank()) + ":w" + std::to_string(cfg.i);
  if (cfg.format == "summary") {
    std::string s = "crystal " + id + "\nN " + std::to_string(t.N) + "\n";
    for (std::size_t a = 0; a < b.graph.size(); ++a)
      for (std::size_t c = 0; c < b.graph.size(); ++c)
        s += "chi(" + b.graph.nodes[a].id + ", " + b.graph.nodes[c].id + ") = " +
             std::to_string(t.at(a, c)) + "\n";
    emit(cfg, s);
  } else if (cfg.format == "dot") {
    throw ConfigError("energy tables are json or summary");
  } else {
    emit(cfg, dump(to_json(t, id)));
  }
  return kOk;
}

int cmd_embed(const RunConfig& cfg) {
  if (cfg.window < 2) throw ConfigError("--window must be at least 2");
  if (cfg.format == "dot") throw ConfigError("embeddings are json or summary");
  const CartanData cd = cartan_of(cfg);
  LoopEmbedding emb(cd, cfg.i, cfg.m);
  const auto xs = emb.window_elements(cfg.window);
  if (xs.size() > cfg.node_cap)
    throw NodeCapExceeded("window exceeds the node cap of " + std::to_string(cfg.node_cap));
  const auto images = emb.psi_all(xs);
  if (cfg.format == "summary") {
    std::string s = "N " + std::to_string(emb.N()) + "\nelements " + std::to_string(xs.size()) + "\n";
    for (std::size_t k = 0; k < xs.size(); ++k)
      s += emb.affinized().key(xs[k]) + " -> " + images[k].path.key() + " [class " +
           std::to_string(emb.c_class(xs[k])) + "]\n";
    emit(cfg, s);
    return kOk;
  }
  Json rows = Json::array();
  for (std::size_t k = 0; k < xs.size(); ++k) {
    Json kap = Json::array();
    for (const auto& r : images[k].kappas) kap.push_back(to_string(r));
    rows.push_back({{"source", emb.affinized().key(xs[k])},
                    {"maj", emb.maj_of(xs[k].base)},
                    {"class", emb.c_class(xs[k])},
                    {"kappa", kap},
                    {"image", to_json(images[k].path)}});
  }
  emit(cfg, dump(Json{{"N", emb.N()}, {"m", cfg.m}, {"window", cfg.window}, {"psi", rows}}));
  return kOk;
}

int cmd_cartan(const RunConfig& cfg) {
  const CartanData cd = CartanData::build(cfg.type, cfg.rank);
  if (cfg.format == "json") {
    emit(cfg, dump(to_json(cd)));
    return kOk;
  }
  if (cfg.format == "dot") throw ConfigError("cartan data is json or summary");
  std::string s = "type " + cd.type_label() + std::to_string(cd.rank()) + "\n";
  for (int a = 0; a < cd.size(); ++a) {
    for (int b = 0; b < cd.size(); ++b) s += (b ? " " : "") + std::to_string(cd.entry(a, b));
    s += "\n";
  }
  emit(cfg, s);
  return kOk;
}

void add_cartan_opts(CLI::App* app, RunConfig& cfg) {
  app->add_option("--type", cfg.type, "Cartan type letter")->capture_default_str();
  app->add_option("--rank", cfg.rank, "rank of the finite part")->capture_default_str();
}

void add_common(CLI::App* app, RunConfig& cfg) {
  app->add_option("--format", cfg.format, "json, dot or summary")->capture_default_str();
  app->add_option("--out", cfg.out, "output file (written atomically)");
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  try {
    cfg.node_cap = node_cap_from_env();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }

  CLI::App app{"loom: Littelmann paths, affine crystals and loop embeddings"};
  app.require_subcommand(1);
  app.add_option("--threads", cfg.threads, "OpenMP threads (0 = runtime default)");
  app.add_option("--node-cap", cfg.node_cap, "maximum nodes per generated crystal");

  auto* gen = app.add_subcommand("gen", "generate a crystal graph");
  add_cartan_opts(gen, cfg);
  add_common(gen, cfg);
  gen->add_option("--i", cfg.i, "fundamental index")->capture_default_str();
  gen->add_option("--power,--m", cfg.m, "tensor power")->capture_default_str();
  gen->add_option("--ambient", cfg.ambient, "classical or affine")->capture_default_str();
  gen->add_flag("--ls", cfg.ls, "path crystal of a dominant weight given by --weight");
  gen->add_option("--weight", cfg.weight, "weight literal such as \"2w1+1d\"");
  gen->add_option("--window", cfg.window, "δ-window for affine generation")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_cartan_opts(verify, cfg);
  add_common(verify, cfg);
  verify->add_option("target", cfg.target, "psi-decomposition or sl2-lemma");
  verify->add_option("--suite", cfg.suite, "suite name or all");
  verify->add_option("--i", cfg.i, "fundamental index")->capture_default_str();
  verify->add_option("--m,--power", cfg.m, "tensor power")->capture_default_str();
  verify->add_option("--window", cfg.window, "δ-window")->capture_default_str();
  verify->add_option("--t1", cfg.t1, "first sl2 factor")->capture_default_str();
  verify->add_option("--t2", cfg.t2, "second sl2 factor")->capture_default_str();
  verify->add_flag("--json", cfg.json, "JSON report");

  auto* energy = app.add_subcommand("energy", "energy table of B(w_i)");
  add_cartan_opts(energy, cfg);
  add_common(energy, cfg);
  energy->add_option("--i", cfg.i, "fundamental index")->capture_default_str();

  auto* embed = app.add_subcommand("embed", "psi images of the affinized tensor window");
  add_cartan_opts(embed, cfg);
  add_common(embed, cfg);
  embed->add_option("--i", cfg.i, "fundamental index")->capture_default_str();
  embed->add_option("--m,--power", cfg.m, "tensor power")->capture_default_str();
  embed->add_option("--window", cfg.window, "δ-window")->capture_default_str();

  auto* cartan = app.add_subcommand("cartan", "affine Cartan data");
  add_cartan_opts(cartan, cfg);
  add_common(cartan, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    check_common(cfg);
    if (cfg.threads > 0) omp_set_num_threads(cfg.threads);
    if (app.got_subcommand(gen)) return cmd_gen(cfg);
    if (app.got_subcommand(verify)) return cmd_verify(cfg);
    if (app.got_subcommand(energy)) return cmd_energy(cfg);
    if (app.got_subcommand(embed)) return cmd_embed(cfg);
    return cmd_cartan(cfg);
  } catch (const NodeCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNodeCap;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
}
