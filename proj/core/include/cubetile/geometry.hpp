#pragma once

// Explicit model of 2x2xn boards, pieces and tilings, with exhaustive
// enumeration for small boards. This is the ground-truth oracle the faster
// backends are checked against. Boards may carry a defect: one to three
// cells removed from the last layer, or the three-cell defect extended by
// a capping cell one layer up (whose two cells are always tiled by a
// single upright brick).

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubetile/poly2.hpp"

namespace cubetile {

/// One unit cell. x, y in {0,1}; z is the 1-based layer index.
/// Within a layer, cells are linearly indexed as x + 2*y (0..3).
struct Cell {
  int x = 0;
  int y = 0;
  int z = 1;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

enum class PieceKind { cube, brick_x, brick_y, brick_z };

/// A placed piece: a cube covers its anchor; a brick covers the anchor and
/// its neighbor in the +x, +y or +z direction.
struct Piece {
  PieceKind kind = PieceKind::cube;
  Cell anchor;
  bool is_brick() const { return kind != PieceKind::cube; }
  Cell second_cell() const;  // brick partner; invalid to call on a cube
  friend auto operator<=>(const Piece&, const Piece&) = default;
};

/// A complete tiling: pieces covering every board cell exactly once, in
/// the deterministic enumeration order (anchor-by-anchor).
struct Tiling {
  int layers = 0;  // n of the board tiled
  std::vector<Piece> pieces;
};

/// Defect applied to the last layer of a board. Values 1..5 match the
/// CLI's --j indices.
enum class DefectKind {
  none = 0,
  one_cell = 1,        // one cell removed; 4 positions
  face_pair = 2,       // two face-adjacent cells removed; 4 positions
  diagonal_pair = 3,   // two diagonally opposite cells removed; 2 positions
  three_cells = 4,     // three cells removed; 4 positions (by survivor)
  three_cells_capped = 5,  // three_cells plus a cell above the survivor
};

struct Board {
  int layers = 0;
  DefectKind defect = DefectKind::none;
  int defect_pos = 0;

  static Board full(int n);
  /// j in 1..5, pos within the defect's position range (see
  /// defect_position_count). Requires n >= 1.
  static Board with_defect(int j, int n, int pos = 0);

  int cell_count() const;
  std::vector<Cell> cells() const;
};

class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exhaustive enumeration is refused above this board size.
struct EnumerationLimit {
  int max_cells = 20;  // 2x2x5
};

/// Calls fn once per distinct uncolored tiling, in deterministic order:
/// the lowest-indexed free cell is covered first, trying cube, then x-,
/// y-, z-brick. Throws LimitExceeded above the cell limit.
void for_each_tiling(const Board& board,
                     const std::function<void(const Tiling&)>& fn,
                     const EnumerationLimit& limit = {});

std::vector<Tiling> enumerate_tilings(const Board& board,
                                      const EnumerationLimit& limit = {});

/// a^(#cubes) * b^(#bricks).
Poly2 weight(const Tiling& tiling);

/// Sum of weights over all tilings of the board.
Poly2 count_exhaustive(const Board& board, const EnumerationLimit& limit = {});

/// True iff the tiling splits into independent tilings of layers 1..i and
/// i+1..n, i.e. no upright brick spans layers i and i+1. Positions 0 and n
/// are unbreakable by convention and return false.
bool is_breakable_at(const Tiling& tiling, int position);

/// Sum of weights over tilings of the full board breakable at no interior
/// position.
Poly2 count_unbreakable_exhaustive(int n, const EnumerationLimit& limit = {});

/// Positions a defect can occupy within the layer (4, 4, 2, 4, 4).
int defect_position_count(int j);
/// Aggregation multiplicity; equals defect_position_count.
int defect_multiplicity(int j);

/// Count for defect j at length n, aggregated over all positions as
/// multiplicity * representative (the board is 4-fold symmetric, so every
/// position yields the same count). For j=5 the two capping cells are
/// always tiled by one upright brick.
Poly2 count_defect_exhaustive(int j, int n, const EnumerationLimit& limit = {});

/// Debug text form: one piece per line, "kind x y z".
std::string format_tiling(const Tiling& tiling);

}  // namespace cubetile
