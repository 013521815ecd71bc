#include "loom/energy.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace loom {

namespace {

constexpr long kUnset = std::numeric_limits<long>::min();

struct Move {
  std::size_t to;
  long shift;
  int label;
  bool lowering;
};

std::vector<Move> moves(const TensorKind& sq, std::size_t n, std::size_t x) {
  const TensorKind::Element pair{x / n, x % n};
  std::vector<Move> out;
  for (int i = 0; i < sq.labels(); ++i) {
    const long d = i == 0 ? 1 : 0;
    if (auto y = sq.lower(pair, i)) {
      const bool left = sq.lower_position(pair, i) == 0;
      out.push_back({(*y)[0] * n + (*y)[1], left ? d : -d, i, true});
    }
    if (auto y = sq.raise(pair, i)) {
      const bool left = sq.raise_position(pair, i) == 0;
      out.push_back({(*y)[0] * n + (*y)[1], left ? -d : d, i, false});
    }
  }
  return out;
}

}  // namespace

EnergyTable energy_table(const CrystalGraph& b, long N, std::optional<std::uint64_t> shuffle_seed) {
  if (b.truncated || b.nodes.empty())
    throw std::invalid_argument("energy needs a finite untruncated crystal");
  const TensorKind sq = TensorKind::power(b, 2);
  const std::size_t n = b.size();
  std::vector<long> chi(n * n, kUnset);
  std::optional<std::mt19937_64> rng;
  if (shuffle_seed) rng.emplace(*shuffle_seed);

  const std::size_t start = b.seed * n + b.seed;
  chi[start] = 0;
  std::vector<std::size_t> queue{start};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t x = queue[head];
    auto out = moves(sq, n, x);
    if (rng) std::shuffle(out.begin(), out.end(), *rng);
    for (const auto& m : out) {
      if (chi[m.to] != kUnset) continue;
      chi[m.to] = chi[x] + m.shift;
      queue.push_back(m.to);
    }
  }
  if (queue.size() != n * n)
    throw DisconnectedTensorSquare("tensor square reaches " + std::to_string(queue.size()) +
                                   " of " + std::to_string(n * n) + " pairs from the seed");

  auto pair_name = [&](std::size_t x) {
    return b.nodes[x / n].id + " ⊗ " + b.nodes[x % n].id;
  };
  for (std::size_t x = 0; x < n * n; ++x)
    for (const auto& m : moves(sq, n, x))
      if (chi[m.to] != chi[x] + m.shift)
        throw InconsistentEnergy(std::string(m.lowering ? "f_" : "e_") + std::to_string(m.label) +
                                 " from " + pair_name(x) + " breaks the energy recursion");

  EnergyTable t;
  t.crystal = &b;
  t.N = N;
  t.chi.assign(n, std::vector<long>(n));
  for (std::size_t x = 0; x < n * n; ++x) t.chi[x / n][x % n] = chi[x];
  return t;
}

long choose_N(const std::vector<Path>& elements) {
  Integer n = 1;
  for (const auto& p : elements)
    for (const auto& t : p.breakpoints()) n = lcm(n, Integer(t.get_den()));
  return n.get_si();
}

long coroot_grid_bound(const CartanData& cd) {
  Integer n = 1;
  for (const auto& c : cd.finite_positive_coroots())
    for (int x : c)
      if (x != 0) n = lcm(n, Integer(x));
  return n.get_si();
}

std::vector<std::size_t> refine(const Realized<PathKind>& b, const std::vector<std::size_t>& factors,
                                long N) {
  std::vector<std::size_t> word;
  word.reserve(factors.size() * static_cast<std::size_t>(N));
  for (auto f : factors) {
    for (const auto& nu : segment_uniform(b.elements.at(f), N)) {
      const std::string k = Path::linear(nu).key();
      auto idx = b.graph.find(k);
      if (!idx) throw NotInCrystal("refined factor " + k + " is not a node of the crystal");
      word.push_back(*idx);
    }
  }
  return word;
}

long maj(const std::vector<std::size_t>& word, const EnergyTable& table) {
  long total = 0;
  for (std::size_t r = 1; r < word.size(); ++r)
    total += static_cast<long>(r) * table.at(word[r - 1], word[r]);
  return total;
}

}  // namespace loom
