#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <unistd.h>

#include "loom/loop_embed.hpp"
#include "loom/sl2.hpp"
#include "loom/suites.hpp"

using namespace loom;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) note = what;
    pass = pass && ok;
  }
  void require(const Report& rep, const std::string& what) {
    for (const auto& c : rep.checks)
      if (!c.pass) {
        require(false, what + ": " + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")"));
        return;
      }
  }
};

bool criterion(int number, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.pass = false;
    out.note = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0 && secs >= limit_s) out.require(false, "time limit exceeded");
  std::printf("%s %d %s (%.2f s%s)%s%s\n", out.pass ? "PASS" : "FAIL", number, title.c_str(), secs,
              limit_s > 0 ? (", limit " + std::to_string(static_cast<int>(limit_s)) + " s").c_str() : "",
              out.note.empty() ? "" : ": ", out.note.c_str());
  std::fflush(stdout);
  return out.pass;
}

SuiteConfig config(const char* type, int rank, int m, long window = 3) {
  SuiteConfig c;
  c.type = type;
  c.rank = rank;
  c.m = m;
  c.window = window;
  return c;
}

Outcome cartan_consistency() {
  Outcome out;
  for (auto [t, r] : std::vector<std::pair<const char*, int>>{{"A", 1}, {"A", 2}, {"C", 2}, {"B", 3}}) {
    const auto cd = CartanData::build(t, r);
    const std::string tag = std::string(t) + std::to_string(r);
    for (int i = 0; i < cd.size(); ++i) {
      long row = 0, col = 0;
      for (int j = 0; j < cd.size(); ++j) {
        row += cd.entry(i, j) * cd.marks()[j];
        col += cd.comarks()[j] * cd.entry(j, i);
        out.require(cd.symmetrizers()[i] * cd.entry(i, j) == cd.symmetrizers()[j] * cd.entry(j, i),
                    tag + " not symmetrizable");
      }
      out.require(row == 0, tag + " A·marks ≠ 0");
      out.require(col == 0, tag + " comarks·A ≠ 0");
    }
    out.require(cd.marks()[0] == 1 && cd.comarks()[0] == 1, tag + " node 0 marks");
  }
  return out;
}

Outcome base_cases() {
  Outcome out;
  {
    const auto cd = CartanData::build("A", 1);
    const auto b = fundamental_crystal(PathKind(cd), 1);
    const std::string plus = Path::linear(cd.classical_fundamental(1)).key();
    const std::string minus = Path::linear(-cd.classical_fundamental(1)).key();
    std::set<std::tuple<std::string, int, std::string>> edges;
    for (const auto& e : b.graph.edges) edges.emplace(b.graph.nodes[e.src].id, e.label, b.graph.nodes[e.dst].id);
    out.require(b.graph.size() == 2, "A1 node count");
    out.require(edges == std::set<std::tuple<std::string, int, std::string>>{{plus, 1, minus}, {minus, 0, plus}},
                "A1 edges");
  }
  {
    const auto cd = CartanData::build("A", 2);
    const auto b = fundamental_crystal(PathKind(cd), 1);
    out.require(b.graph.size() == 3 && b.graph.edges.size() == 3, "A2 sizes");
    std::size_t v = b.graph.seed;
    std::set<int> labels;
    for (int step = 0; step < 3; ++step) {
      int next = -1;
      for (int i = 0; i < 3; ++i)
        if (b.graph.f_next[v][i] != kNoNode) {
          out.require(next < 0, "A2 node with two out-edges");
          next = i;
        }
      out.require(next >= 0, "A2 path ends");
      if (next < 0) return out;
      labels.insert(next);
      v = b.graph.f_next[v][next];
    }
    out.require(v == b.graph.seed && labels.size() == 3, "A2 not a single 3-cycle");
  }
  return out;
}

Outcome operator_suites() {
  Outcome out;
  for (const auto& c : {config("A", 1, 3), config("A", 2, 3), config("C", 2, 1)})
    for (const char* s : {"normality", "weyl", "stretch", "concat", "xi"})
      out.require(run_suite(s, c), c.type + std::to_string(c.rank) + " " + s);
  return out;
}

Outcome energy() {
  Outcome out;
  const auto cd = CartanData::build("A", 1);
  const auto b = fundamental_crystal(PathKind(cd), 1);
  const std::size_t p = *b.graph.find(Path::linear(cd.classical_fundamental(1)).key());
  const std::size_t m = *b.graph.find(Path::linear(-cd.classical_fundamental(1)).key());
  const auto t = energy_table(b.graph);
  out.require(t.at(p, p) == 0 && t.at(p, m) == 1 && t.at(m, p) == 0 && t.at(m, m) == 0, "A1 fixture");
  for (const auto& c : {config("A", 1, 2), config("A", 2, 2), config("C", 2, 2)}) {
    const Report rep = run_suite("energy", c);
    out.require(rep, c.type + std::to_string(c.rank));
    if (c.type == "A") {
      bool found = false;
      for (const auto& chk : rep.checks) found = found || chk.name == "total_preorder";
      out.require(found, "total preorder not examined");
    }
  }
  return out;
}

Outcome major_index() {
  Outcome out;
  for (const auto& c : {config("A", 1, 3, 4), config("A", 2, 3, 4)})
    out.require(run_suite("maj", c), c.type + std::to_string(c.rank));
  return out;
}

Outcome decompositions() {
  struct Run {
    const char* type;
    int rank, m;
    long window;
  };
  Outcome out;
  for (const Run& r : {Run{"A", 1, 1, 3}, Run{"A", 1, 2, 3}, Run{"A", 1, 3, 4}, Run{"A", 2, 2, 3}}) {
    const std::string tag = std::string(r.type) + std::to_string(r.rank) + " m=" + std::to_string(r.m) +
                            " W=" + std::to_string(r.window);
    const auto start = std::chrono::steady_clock::now();
    out.require(verify_decomposition(CartanData::build(r.type, r.rank), 1, r.m, r.window), tag);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.require(secs < 60, tag + " took more than 60 s");
  }
  return out;
}

Outcome lemma() {
  Outcome out;
  for (int t1 = 0; t1 <= 4; ++t1)
    for (int t2 = 0; t2 <= 4; ++t2)
      out.require(sl2::verify_lemma(t1, t2), "(" + std::to_string(t1) + "," + std::to_string(t2) + ")");
  return out;
}

Outcome arithmetic() {
  Outcome out;
  for (int t1 = 0; t1 <= 4; ++t1)
    for (int t2 = 0; t2 <= 4; ++t2) out.require(sl2::verify_relations({t1, t2}), "relations");
  out.require(sl2::verify_coassociativity({1, 1, 1}), "coassociativity (1,1,1)");
  out.require(sl2::verify_coassociativity({2, 1, 1}), "coassociativity (2,1,1)");
  out.require(sl2::verify_qbinom(8), "q-binomials");
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

Outcome determinism(const std::string& cli) {
  Outcome out;
  if (cli.empty()) {
    out.require(false, "no CLI path given");
    return out;
  }
  const std::vector<std::string> commands{
      "cartan --type B --rank 3",
      "gen --type A --rank 1 --i 1 --ambient classical",
      "gen --type A --rank 2 --i 1 --power 3",
      "gen --type A --rank 2 --i 1 --power 2 --format dot",
      "gen --type A --rank 1 --i 1 --power 2 --ambient affine --window 3",
      "gen --type A --rank 1 --i 1 --ls --weight \"2w1+1d\" --window 3",
      "gen --type C --rank 2 --i 1 --format summary",
      "energy --type A --rank 2 --i 1",
      "embed --type A --rank 1 --i 1 --m 2 --window 3",
      "verify --suite decompose --type A --rank 1 --i 1 --m 2 --window 3",
      "verify --suite all --type A --rank 2 --i 1 --m 2 --window 3",
      "verify sl2-lemma --t1 2 --t2 3 --json"};
  const auto dir = std::filesystem::temp_directory_path() / ("loom_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  for (std::size_t k = 0; k < commands.size(); ++k) {
    std::string first;
    int run = 0;
    for (int threads : {1, 1, 4}) {
      const auto file = dir / ("out" + std::to_string(k) + "_" + std::to_string(run++));
      const std::string cmd = "\"" + cli + "\" --threads " + std::to_string(threads) + " " + commands[k] +
                              " > \"" + file.string() + "\"";
      const int rc = std::system(cmd.c_str());
      out.require(rc == 0, "exit status of: " + commands[k]);
      const std::string bytes = slurp(file);
      out.require(!bytes.empty(), "empty output of: " + commands[k]);
      if (run == 1)
        first = bytes;
      else
        out.require(bytes == first, "output differs for: " + commands[k]);
    }
  }
  std::filesystem::remove_all(dir);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  bool ok = true;
  ok &= criterion(1, "Cartan self-consistency for A1, A2, C2, B3", 1, cartan_consistency);
  ok &= criterion(2, "path-operator base cases for A1 and A2", 0, base_cases);
  ok &= criterion(3, "operator identity suites on A1/A2 (m <= 3) and C2", 30, operator_suites);
  ok &= criterion(4, "energy fixture, recursion, total preorder and BFS determinism", 0, energy);
  ok &= criterion(5, "major index shift and kappa endpoints for m in {2, 3}", 0, major_index);
  ok &= criterion(6, "decomposition runs A1 m=1,2,3 and A2 m=2 (60 s each)", 0, decompositions);
  ok &= criterion(7, "sl2 tensor lemma for t1, t2 <= 4", 60, lemma);
  ok &= criterion(8, "sl2 relations, bracketings and q-binomials", 0, arithmetic);
  ok &= criterion(9, "CLI artifacts byte-identical across runs and thread counts", 0,
                  [&] { return determinism(cli); });
  return ok ? 0 : 1;
}
