#include "cubetile/layer_dp.hpp"

#include <stdexcept>

#include "cubetile/geometry.hpp"

namespace cubetile {

namespace {

using MaskVector = std::array<Poly2, 16>;

int lowest_bit(unsigned mask) { return __builtin_ctz(mask); }

// One DP step: out[t] = sum_s in[s] * T[s][t].
MaskVector step(const MaskVector& in, const LayerTransfer& transfer) {
  MaskVector out;
  for (int s = 0; s < 16; ++s) {
    if (in[s].is_zero()) continue;
    for (int t = 0; t < 16; ++t) {
      const Poly2& entry = transfer.entries[s][t];
      if (!entry.is_zero()) out[t] += in[s] * entry;
    }
  }
  return out;
}

const LayerTransfer& standard_transfer() {
  static const LayerTransfer transfer =
      build_layer_transfer(Poly2::var_a(), Poly2::var_b());
  return transfer;
}

void require_nonnegative(int n, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": negative n");
}

}  // namespace

Poly2 layer_fill_count(unsigned free_mask, const Poly2& cube_weight,
                       const Poly2& brick_weight) {
  if (free_mask == 0) return Poly2(1);
  const int c = lowest_bit(free_mask);
  const unsigned rest = free_mask & ~(1u << c);

  Poly2 total = cube_weight * layer_fill_count(rest, cube_weight, brick_weight);
  // In-layer neighbors with a higher index: +x for cells 0 and 2, +y for
  // cells 0 and 1 (cells are indexed x + 2*y).
  const int x_partner = (c == 0 || c == 2) ? c + 1 : -1;
  const int y_partner = (c == 0 || c == 1) ? c + 2 : -1;
  for (int partner : {x_partner, y_partner}) {
    if (partner >= 0 && (rest >> partner) & 1u)
      total += brick_weight *
               layer_fill_count(rest & ~(1u << partner), cube_weight, brick_weight);
  }
  return total;
}

LayerTransfer build_layer_transfer(const Poly2& cube_weight,
                                   const Poly2& brick_weight) {
  LayerTransfer transfer;
  for (unsigned s = 0; s < 16; ++s) {
    const unsigned free = ~s & 0xFu;
    // Enumerate outgoing masks t as subsets of the free cells; entries for
    // overlapping t stay zero.
    for (unsigned t = free;; t = (t - 1) & free) {
      transfer.entries[s][t] =
          brick_weight.pow(__builtin_popcount(t)) *
          layer_fill_count(free & ~t, cube_weight, brick_weight);
      if (t == 0) break;
    }
  }
  return transfer;
}

LayerTransfer build_layer_transfer() { return standard_transfer(); }

Poly2 count_dp(int n) {
  require_nonnegative(n, "count_dp");
  const LayerTransfer& transfer = standard_transfer();
  MaskVector u;
  u[0] = Poly2(1);
  for (int i = 0; i < n; ++i) u = step(u, transfer);
  return u[0];
}

Poly2 count_unbreakable_dp(int n) {
  require_nonnegative(n, "count_unbreakable_dp");
  const LayerTransfer& transfer = standard_transfer();
  if (n == 0) return Poly2(1);
  if (n == 1) return transfer.at(0, 0);

  // First layer: start from mask 0, forbid returning to mask 0 until the
  // final layer.
  MaskVector u;
  for (int t = 1; t < 16; ++t) u[t] = transfer.at(0, t);
  for (int i = 2; i < n; ++i) {
    u = step(u, transfer);
    u[0] = Poly2();
  }
  Poly2 total;
  for (int s = 1; s < 16; ++s) total += u[s] * transfer.at(s, 0);
  return total;
}

Poly2 count_with_piece_weights(int n, const Poly2& cube_weight,
                               const Poly2& brick_weight) {
  require_nonnegative(n, "count_with_piece_weights");
  const LayerTransfer transfer = build_layer_transfer(cube_weight, brick_weight);
  MaskVector u;
  u[0] = Poly2(1);
  for (int i = 0; i < n; ++i) u = step(u, transfer);
  return u[0];
}

Poly2 count_defect_dp(int j, int n) {
  if (n < 1) throw std::invalid_argument("count_defect_dp: need n >= 1");
  const Rational multiplicity(defect_multiplicity(j));  // validates j

  if (j == 5) return multiplicity * Poly2::var_b() * count_dp(n - 1);

  // Representative surviving cells of the last layer, matching the
  // exhaustive counter's position-0 boards.
  static constexpr unsigned survivors[] = {0, 0b1110, 0b1100, 0b0110, 0b0001};
  const unsigned last = survivors[j];

  const LayerTransfer& transfer = standard_transfer();
  MaskVector u;
  u[0] = Poly2(1);
  for (int i = 0; i < n - 1; ++i) u = step(u, transfer);

  // Final layer: incoming bricks may only land on surviving cells, and no
  // brick may start upward.
  Poly2 total;
  for (unsigned s = 0; s < 16; ++s) {
    if ((s & ~last) != 0 || u[s].is_zero()) continue;
    total += u[s] * layer_fill_count(last & ~s, Poly2::var_a(), Poly2::var_b());
  }
  return multiplicity * total;
}

}  // namespace cubetile
