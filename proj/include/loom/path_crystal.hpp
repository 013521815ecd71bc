#pragma once

#include "loom/crystal.hpp"
#include "loom/path.hpp"

namespace loom {

/// Littelmann paths under the root operators of a fixed Cartan datum.
class PathKind {
 public:
  using Element = Path;

  explicit PathKind(const CartanData& cd) : cd_(&cd) {}

  const CartanData& cartan() const { return *cd_; }
  int labels() const { return cd_->size(); }
  std::string key(const Path& p) const { return p.key(); }
  Weight weight(const Path& p) const { return p.endpoint(); }
  long epsilon(const Path& p, int i) const { return loom::epsilon(*cd_, p, i); }
  long phi(const Path& p, int i) const { return loom::phi(*cd_, p, i); }
  std::optional<Path> raise(const Path& p, int i) const { return loom::raise(*cd_, p, i); }
  std::optional<Path> lower(const Path& p, int i) const { return loom::lower(*cd_, p, i); }

 private:
  const CartanData* cd_;
};

/// B(ϖ_i) in the classical ambient, generated from π_{ϖ_i}.
Realized<PathKind> fundamental_crystal(const PathKind& kind, int i,
                                       Execution execution = Execution::Parallel,
                                       std::size_t node_cap = kDefaultNodeCap);

}  // namespace loom
