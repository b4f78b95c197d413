#include "cubetile/geometry.hpp"

#include <array>
#include <cassert>

namespace cubetile {

namespace {

// Cells of the representative defect removed from the last layer, by kind.
// Position p indexes the symmetric variants.
std::vector<int> removed_cells(DefectKind kind, int pos) {
  static const std::array<std::array<int, 2>, 4> face_pairs{{{0, 1}, {2, 3}, {0, 2}, {1, 3}}};
  static const std::array<std::array<int, 2>, 2> diag_pairs{{{0, 3}, {1, 2}}};
  switch (kind) {
    case DefectKind::none:
      return {};
    case DefectKind::one_cell:
      return {pos};
    case DefectKind::face_pair:
      return {face_pairs[pos][0], face_pairs[pos][1]};
    case DefectKind::diagonal_pair:
      return {diag_pairs[pos][0], diag_pairs[pos][1]};
    case DefectKind::three_cells:
    case DefectKind::three_cells_capped: {
      std::vector<int> out;
      for (int c = 0; c < 4; ++c)
        if (c != pos) out.push_back(c);  // pos is the survivor
      return out;
    }
  }
  return {};
}

int cell_index(const Cell& c) { return (c.z - 1) * 4 + c.x + 2 * c.y; }

Cell cell_at(int index) {
  return Cell{(index % 4) % 2, (index % 4) / 2, index / 4 + 1};
}

struct Enumerator {
  int layers = 0;
  std::vector<char> free_cell;  // indexed by cell_index; false = occupied/absent
  std::vector<Piece> placed;
  const std::function<void(const Tiling&)>* emit = nullptr;

  bool is_free(int idx) const {
    return idx >= 0 && idx < static_cast<int>(free_cell.size()) && free_cell[idx];
  }

  void run(int from) {
    int idx = from;
    while (idx < static_cast<int>(free_cell.size()) && !free_cell[idx]) ++idx;
    if (idx == static_cast<int>(free_cell.size())) {
      (*emit)(Tiling{layers, placed});
      return;
    }

    const Cell cell = cell_at(idx);
    free_cell[idx] = 0;

    placed.push_back({PieceKind::cube, cell});
    run(idx + 1);
    placed.pop_back();

    // Brick partners with a higher index; lower-indexed cells are already
    // covered, so only these can pair with the first free cell.
    struct Option {
      PieceKind kind;
      int partner;
    };
    const std::array<Option, 3> options{{
        {PieceKind::brick_x, cell.x == 0 ? idx + 1 : -1},
        {PieceKind::brick_y, cell.y == 0 ? idx + 2 : -1},
        {PieceKind::brick_z, idx + 4},
    }};
    for (const Option& opt : options) {
      if (!is_free(opt.partner)) continue;
      free_cell[opt.partner] = 0;
      placed.push_back({opt.kind, cell});
      run(idx + 1);
      placed.pop_back();
      free_cell[opt.partner] = 1;
    }

    free_cell[idx] = 1;
  }
};

}  // namespace

Cell Piece::second_cell() const {
  switch (kind) {
    case PieceKind::brick_x:
      return {anchor.x + 1, anchor.y, anchor.z};
    case PieceKind::brick_y:
      return {anchor.x, anchor.y + 1, anchor.z};
    case PieceKind::brick_z:
      return {anchor.x, anchor.y, anchor.z + 1};
    case PieceKind::cube:
      break;
  }
  assert(false && "cube has no second cell");
  return anchor;
}

Board Board::full(int n) {
  if (n < 0) throw std::invalid_argument("Board::full: negative length");
  return Board{n, DefectKind::none, 0};
}

Board Board::with_defect(int j, int n, int pos) {
  if (j < 1 || j > 5) throw std::invalid_argument("Board::with_defect: j must be 1..5");
  if (n < 1) throw std::invalid_argument("Board::with_defect: need at least one layer");
  if (pos < 0 || pos >= defect_position_count(j))
    throw std::invalid_argument("Board::with_defect: position out of range");
  return Board{n, static_cast<DefectKind>(j), pos};
}

int Board::cell_count() const {
  int count = 4 * layers;
  switch (defect) {
    case DefectKind::none:
      break;
    case DefectKind::one_cell:
      count -= 1;
      break;
    case DefectKind::face_pair:
    case DefectKind::diagonal_pair:
      count -= 2;
      break;
    case DefectKind::three_cells:
      count -= 3;
      break;
    case DefectKind::three_cells_capped:
      count -= 2;  // three removed, one added above
      break;
  }
  return count;
}

std::vector<Cell> Board::cells() const {
  std::vector<char> removed(4, 0);
  for (int c : removed_cells(defect, defect_pos)) removed[c] = 1;

  std::vector<Cell> out;
  out.reserve(cell_count());
  for (int z = 1; z <= layers; ++z)
    for (int i = 0; i < 4; ++i)
      if (z < layers || defect == DefectKind::none || !removed[i])
        out.push_back(cell_at((z - 1) * 4 + i));
  if (defect == DefectKind::three_cells_capped)
    out.push_back(cell_at(layers * 4 + defect_pos));
  return out;
}

void for_each_tiling(const Board& board,
                     const std::function<void(const Tiling&)>& fn,
                     const EnumerationLimit& limit) {
  if (board.cell_count() > limit.max_cells)
    throw LimitExceeded("exhaustive enumeration limited to " +
                        std::to_string(limit.max_cells) + " cells, board has " +
                        std::to_string(board.cell_count()));

  const bool capped = board.defect == DefectKind::three_cells_capped;
  Enumerator e;
  e.layers = board.layers;
  e.free_cell.assign(4 * (board.layers + (capped ? 1 : 0)), 0);
  for (const Cell& c : board.cells()) e.free_cell[cell_index(c)] = 1;
  e.emit = &fn;

  if (capped) {
    // The survivor cell and its cap are always tiled by one upright brick.
    const Cell survivor = cell_at((board.layers - 1) * 4 + board.defect_pos);
    e.free_cell[cell_index(survivor)] = 0;
    e.free_cell[cell_index(survivor) + 4] = 0;
    e.placed.push_back({PieceKind::brick_z, survivor});
  }
  e.run(0);
}

std::vector<Tiling> enumerate_tilings(const Board& board, const EnumerationLimit& limit) {
  std::vector<Tiling> out;
  for_each_tiling(board, [&](const Tiling& t) { out.push_back(t); }, limit);
  return out;
}

Poly2 weight(const Tiling& tiling) {
  int cubes = 0;
  for (const Piece& p : tiling.pieces)
    if (p.kind == PieceKind::cube) ++cubes;
  return Poly2::monomial(1, cubes, static_cast<int>(tiling.pieces.size()) - cubes);
}

Poly2 count_exhaustive(const Board& board, const EnumerationLimit& limit) {
  Poly2 total;
  for_each_tiling(board, [&](const Tiling& t) { total += weight(t); }, limit);
  return total;
}

bool is_breakable_at(const Tiling& tiling, int position) {
  if (position <= 0 || position >= tiling.layers) return false;
  for (const Piece& p : tiling.pieces)
    if (p.kind == PieceKind::brick_z && p.anchor.z == position) return false;
  return true;
}

Poly2 count_unbreakable_exhaustive(int n, const EnumerationLimit& limit) {
  Poly2 total;
  for_each_tiling(
      Board::full(n),
      [&](const Tiling& t) {
        for (int i = 1; i < n; ++i)
          if (is_breakable_at(t, i)) return;
        total += weight(t);
      },
      limit);
  return total;
}

int defect_position_count(int j) {
  switch (j) {
    case 1:
    case 2:
    case 4:
    case 5:
      return 4;
    case 3:
      return 2;
  }
  throw std::invalid_argument("defect index must be 1..5");
}

int defect_multiplicity(int j) { return defect_position_count(j); }

Poly2 count_defect_exhaustive(int j, int n, const EnumerationLimit& limit) {
  return Rational(defect_multiplicity(j)) *
         count_exhaustive(Board::with_defect(j, n, 0), limit);
}

std::string format_tiling(const Tiling& tiling) {
  static const char* names[] = {"cube", "xbrick", "ybrick", "zbrick"};
  std::string out;
  for (const Piece& p : tiling.pieces) {
    out += names[static_cast<int>(p.kind)];
    out += ' ';
    out += std::to_string(p.anchor.x);
    out += ' ';
    out += std::to_string(p.anchor.y);
    out += ' ';
    out += std::to_string(p.anchor.z);
    out += '\n';
  }
  return out;
}

}  // namespace cubetile
