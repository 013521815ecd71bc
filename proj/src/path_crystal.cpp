#include "loom/path_crystal.hpp"

namespace loom {

Realized<PathKind> fundamental_crystal(const PathKind& kind, int i, Execution execution,
                                       std::size_t node_cap) {
  const CartanData& cd = kind.cartan();
  if (i < 1 || i > cd.rank())
    throw std::invalid_argument("fundamental index must lie in 1.." + std::to_string(cd.rank()));
  GenerateOptions opt;
  opt.execution = execution;
  opt.node_cap = node_cap;
  return generate(kind, Path::linear(cd.classical_fundamental(i)), opt);
}

}  // namespace loom
