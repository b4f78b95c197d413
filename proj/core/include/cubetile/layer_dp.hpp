#pragma once

// 16-state interface-profile dynamic program over 2x2 layers. The DP state
// is a 4-bit mask of layer cells pre-occupied by upright bricks started in
// the previous layer; mask 0 at an interface means the tiling is breakable
// there. Counts agree with the exhaustive enumerator but scale to large n.

#include <array>

#include "cubetile/poly2.hpp"

namespace cubetile {

/// entries[s][t]: weighted count of ways to complete one layer whose
/// incoming pre-filled cells are s, starting upright bricks exactly on the
/// cells of t. Zero whenever t overlaps s.
struct LayerTransfer {
  std::array<std::array<Poly2, 16>, 16> entries;

  const Poly2& at(int incoming, int outgoing) const {
    return entries[incoming][outgoing];
  }
};

/// Weighted count of fillings of the given free cells of one layer with
/// cubes and in-layer bricks only (no upright bricks). Cells are indexed
/// x + 2*y; bit i of free_mask marks cell i free.
Poly2 layer_fill_count(unsigned free_mask, const Poly2& cube_weight,
                       const Poly2& brick_weight);

LayerTransfer build_layer_transfer(const Poly2& cube_weight,
                                   const Poly2& brick_weight);
/// Transfer under the standard weights: cubes a, bricks b.
LayerTransfer build_layer_transfer();

/// Weighted count of all tilings of the full 2x2xn board: (T^n)[0][0].
Poly2 count_dp(int n);

/// Weighted count of tilings breakable at no interior position: mask paths
/// 0 -> t_1 -> ... -> t_{n-1} -> 0 with every intermediate mask nonzero.
Poly2 count_unbreakable_dp(int n);

/// count_dp with the transfer rebuilt under the given piece weights
/// (substituted in the construction, not in the output polynomial).
Poly2 count_with_piece_weights(int n, const Poly2& cube_weight,
                               const Poly2& brick_weight);

/// Defect-board count via the profile DP, aggregated over positions with
/// the same multiplicity convention as the exhaustive counter. j in 1..5,
/// n >= 1; for j=5 the forced capping brick leaves a full (n-1)-board.
Poly2 count_defect_dp(int j, int n);

}  // namespace cubetile
