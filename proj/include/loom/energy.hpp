#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "loom/path_crystal.hpp"

namespace loom {

/// χ on ordered pairs of B(ϖ_i), normalised by χ(b_0 ⊗ b_0) = 0 at the seed.
struct EnergyTable {
  const CrystalGraph* crystal = nullptr;
  long N = 1;
  /// chi[a][b] = χ(b_a ⊗ b_b), node indices of *crystal.
  std::vector<std::vector<long>> chi;

  long at(std::size_t a, std::size_t b) const { return chi.at(a).at(b); }
};

/// Breadth-first assignment over B ⊗ B using the shift rules
///   f_i on the left: +δ_{i0}, f_i on the right: −δ_{i0},
///   e_i on the left: −δ_{i0}, e_i on the right: +δ_{i0},
/// then checks every e- and f-edge of the tensor square against them.
/// A shuffle seed permutes the order in which neighbours are explored.
EnergyTable energy_table(const CrystalGraph& b, long N = 1,
                         std::optional<std::uint64_t> shuffle_seed = std::nullopt);

/// Least N with every breakpoint of every element on the 1/N grid.
long choose_N(const std::vector<Path>& elements);

/// lcm of the coefficients of the finite positive coroots in the simple coroots.
long coroot_grid_bound(const CartanData& cd);

/// T_N: uniform directions of every factor, as node indices of B(ϖ_i).
/// Throws NotInCrystal when some π_{ν_r} is not a node of the crystal.
std::vector<std::size_t> refine(const Realized<PathKind>& b, const std::vector<std::size_t>& factors,
                                long N);

/// Σ_r r·χ(b_r ⊗ b_{r+1}) with r counted from 1.
long maj(const std::vector<std::size_t>& word, const EnergyTable& table);

}  // namespace loom
