#include "loom/serialize.hpp"

#include <cctype>
#include <sstream>

namespace loom {

Json to_json(const CartanData& cd) {
  return Json{{"type", cd.type_label()}, {"rank", cd.rank()},       {"matrix", cd.matrix()},
              {"marks", cd.marks()},      {"comarks", cd.comarks()}, {"d", cd.symmetrizers()}};
}

Json to_json(const Weight& w) { return Json(w.coordinate_strings()); }

Json to_json(const Path& p) {
  Json segs = Json::array();
  for (const auto& s : p.segments()) segs.push_back({{"dir", to_json(s.dir)}, {"len", to_string(s.len)}});
  return Json{{"segments", segs}, {"endpoint", to_json(p.endpoint())}};
}

Json to_json(const CrystalGraph& g) {
  Json nodes = Json::array(), edges = Json::array();
  for (const auto& n : g.nodes)
    nodes.push_back({{"id", n.id}, {"wt", to_json(n.wt)}, {"eps", n.eps}, {"phi", n.phi}});
  for (const auto& e : g.edges) edges.push_back({{"src", e.src}, {"dst", e.dst}, {"i", e.label}});
  Json out{{"nodes", nodes}, {"edges", edges}, {"seed", g.seed}, {"truncated", g.truncated}};
  if (g.window) out["window"] = *g.window;
  return out;
}

Json to_json(const EnergyTable& t, const std::string& crystal_id) {
  Json chi = Json::array();
  const auto& g = *t.crystal;
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = 0; b < g.size(); ++b)
      chi.push_back({{"a", g.nodes[a].id}, {"b", g.nodes[b].id}, {"v", t.at(a, b)}});
  return Json{{"crystal", crystal_id}, {"N", t.N}, {"chi", chi}};
}

Json to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json j{{"name", c.name}, {"pass", c.pass}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(std::move(j));
  }
  return Json{{"checks", checks}, {"pass", r.ok()}};
}

std::string to_dot(const CrystalGraph& g, const std::string& name) {
  static const char* colours[] = {"red", "blue", "darkgreen", "orange", "purple",
                                  "brown", "magenta", "cyan", "gray"};
  std::ostringstream s;
  s << "digraph \"" << name << "\" {\n";
  for (std::size_t v = 0; v < g.size(); ++v) s << "  n" << v << " [label=\"" << g.nodes[v].id << "\"];\n";
  for (const auto& e : g.edges)
    s << "  n" << e.src << " -> n" << e.dst << " [label=\"" << e.label << "\", color=\""
      << colours[e.label % 9] << "\"];\n";
  s << "}\n";
  return s.str();
}

std::string summary(const CrystalGraph& g) {
  std::ostringstream s;
  s << "nodes " << g.size() << "\nedges " << g.edges.size() << "\ntruncated "
    << (g.truncated ? "yes" : "no") << "\n";
  return s.str();
}

std::string summary(const Report& r) {
  std::ostringstream s;
  for (const auto& c : r.checks) s << (c.pass ? "PASS " : "FAIL ") << c.name << "\n";
  s << (r.ok() ? "all checks passed" : "some checks failed") << "\n";
  return s.str();
}

Weight parse_weight_literal(const CartanData& cd, const std::string& text, bool affine) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw std::invalid_argument("empty weight literal");
  Weight lambda = cd.zero(Ambient::Classical);
  long delta = 0;
  bool has_delta = false;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("weight literal \"" + text + "\": " + why);
  };
  auto read_int = [&](long& out) {
    std::size_t start = pos;
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
    if (start == pos) return false;
    out = std::stol(t.substr(start, pos - start));
    return true;
  };
  bool first = true;
  while (pos < t.size()) {
    long sign = 1;
    if (t[pos] == '+' || t[pos] == '-') {
      sign = t[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      fail("expected + or - at position " + std::to_string(pos));
    }
    first = false;
    long coeff = 1;
    read_int(coeff);
    if (pos < t.size() && t[pos] == '*') ++pos;
    if (pos >= t.size()) fail("term without w<i> or d");
    if (t[pos] == 'd') {
      ++pos;
      delta += sign * coeff;
      has_delta = true;
    } else if (t[pos] == 'w') {
      ++pos;
      long i = 0;
      if (!read_int(i)) fail("w needs an index");
      if (i < 1 || i > cd.rank()) fail("index w" + std::to_string(i) + " outside 1.." + std::to_string(cd.rank()));
      lambda += cd.classical_fundamental(static_cast<int>(i)) * Rational(sign * coeff);
    } else {
      fail(std::string("unexpected character '") + t[pos] + "'");
    }
  }
  if (has_delta || affine) return lambda.with_delta(Rational(delta));
  return lambda;
}

}  // namespace loom
