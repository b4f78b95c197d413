#include "cubetile/geometry.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"

using namespace cubetile;

namespace {

Poly2 P(const char* s) { return Poly2::parse(s); }

std::multiset<Cell> covered_cells(const Tiling& t) {
  std::multiset<Cell> cells;
  for (const Piece& p : t.pieces) {
    cells.insert(p.anchor);
    if (p.is_brick()) cells.insert(p.second_cell());
  }
  return cells;
}

// Every board cell covered exactly once, nothing outside the board.
void check_partition(const Board& board, const Tiling& t) {
  const std::vector<Cell> cells = board.cells();
  const std::multiset<Cell> expected(cells.begin(), cells.end());
  CHECK(covered_cells(t) == expected);
}

}  // namespace

TEST_CASE("single layer has exactly seven tilings") {
  const auto tilings = enumerate_tilings(Board::full(1));
  CHECK(tilings.size() == 7);
  for (const Tiling& t : tilings) check_partition(Board::full(1), t);
}

TEST_CASE("empty board has exactly one empty tiling") {
  const auto tilings = enumerate_tilings(Board::full(0));
  REQUIRE(tilings.size() == 1);
  CHECK(tilings[0].pieces.empty());
  CHECK(weight(tilings[0]) == Poly2(1));
}

TEST_CASE("two layers have 108 tilings") {
  CHECK(enumerate_tilings(Board::full(2)).size() == 108);
}

TEST_CASE("weights count cubes and bricks") {
  const auto tilings = enumerate_tilings(Board::full(1));
  // Deterministic order tries cubes first, so the all-cube tiling is first.
  CHECK(weight(tilings.front()) == P("a^4"));
  int two_bricks = 0;
  for (const Tiling& t : tilings)
    if (weight(t) == P("b^2")) ++two_bricks;
  CHECK(two_bricks == 2);
}

TEST_CASE("exhaustive counts match the small closed forms") {
  CHECK(count_exhaustive(Board::full(1)) == P("a^4+4*a^2*b+2*b^2"));
  CHECK(count_exhaustive(Board::full(2)) ==
        P("a^8+12*a^6*b+42*a^4*b^2+44*a^2*b^3+9*b^4"));
  CHECK(count_exhaustive(Board::with_defect(3, 1)) == P("a^2"));
}

TEST_CASE("count at a=b=1 equals the number of tilings") {
  for (int n = 0; n <= 5; ++n) {
    long tilings = 0;
    Poly2 total;
    for_each_tiling(Board::full(n), [&](const Tiling& t) {
      ++tilings;
      total += weight(t);
    });
    CHECK(total.eval(1, 1) == tilings);
    CHECK(total == count_exhaustive(Board::full(n)));
  }
}

TEST_CASE("partition property holds on every enumerated tiling") {
  for (int n = 0; n <= 3; ++n) {
    const Board board = Board::full(n);
    for_each_tiling(board, [&](const Tiling& t) { check_partition(board, t); });
  }
  for (int j = 1; j <= 5; ++j)
    for (int pos = 0; pos < defect_position_count(j); ++pos) {
      const Board board = Board::with_defect(j, 2, pos);
      for_each_tiling(board, [&](const Tiling& t) { check_partition(board, t); });
    }
}

TEST_CASE("breakability splits at brick-free interfaces only") {
  const auto tilings = enumerate_tilings(Board::full(2));

  int breakable = 0, unbreakable = 0;
  for (const Tiling& t : tilings) {
    CHECK_FALSE(is_breakable_at(t, 0));  // by convention
    CHECK_FALSE(is_breakable_at(t, 2));
    const bool has_crossing_brick =
        std::any_of(t.pieces.begin(), t.pieces.end(), [](const Piece& p) {
          return p.kind == PieceKind::brick_z && p.anchor.z == 1;
        });
    CHECK(is_breakable_at(t, 1) == !has_crossing_brick);
    (is_breakable_at(t, 1) ? breakable : unbreakable)++;
  }
  CHECK(breakable == 49);  // concatenations of two single-layer tilings
  CHECK(unbreakable == 59);

  // The four-column tiling is unbreakable at the middle.
  Tiling columns{2, {{PieceKind::brick_z, {0, 0, 1}},
                     {PieceKind::brick_z, {1, 0, 1}},
                     {PieceKind::brick_z, {0, 1, 1}},
                     {PieceKind::brick_z, {1, 1, 1}}}};
  CHECK_FALSE(is_breakable_at(columns, 1));
}

TEST_CASE("unbreakable counts for short boards") {
  CHECK(count_unbreakable_exhaustive(0) == Poly2(1));
  CHECK(count_unbreakable_exhaustive(1) == P("a^4+4*a^2*b+2*b^2"));
  CHECK(count_unbreakable_exhaustive(2) ==
        P("4*a^6*b+22*a^4*b^2+28*a^2*b^3+5*b^4"));
  CHECK(count_unbreakable_exhaustive(3).eval(1, 1) == 342);
}

TEST_CASE("defect counts at n=1 match the layer analysis") {
  CHECK(count_defect_exhaustive(1, 1) == P("4*a^3+8*a*b"));
  CHECK(count_defect_exhaustive(2, 1) == P("4*a^2+4*b"));
  CHECK(count_defect_exhaustive(3, 1) == P("2*a^2"));
  CHECK(count_defect_exhaustive(4, 1) == P("4*a"));
  CHECK(count_defect_exhaustive(5, 1) == P("4*b"));
}

TEST_CASE("capped defect count is a forced brick times the shorter board") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(count_defect_exhaustive(5, n) ==
          Rational(4) * Poly2::var_b() * count_exhaustive(Board::full(n - 1)));
  }
}

TEST_CASE("defect counts are independent of the position") {
  for (int j = 1; j <= 5; ++j)
    for (int n = 1; n <= 3; ++n) {
      const Poly2 reference = count_exhaustive(Board::with_defect(j, n, 0));
      for (int pos = 1; pos < defect_position_count(j); ++pos)
        CHECK(count_exhaustive(Board::with_defect(j, n, pos)) == reference);
    }
}

TEST_CASE("defect multiplicities") {
  CHECK(defect_multiplicity(1) == 4);
  CHECK(defect_multiplicity(2) == 4);
  CHECK(defect_multiplicity(3) == 2);
  CHECK(defect_multiplicity(4) == 4);
  CHECK(defect_multiplicity(5) == 4);
  CHECK_THROWS_AS(defect_multiplicity(0), std::invalid_argument);
  CHECK_THROWS_AS(defect_multiplicity(6), std::invalid_argument);
}

TEST_CASE("enumeration limit is enforced and configurable") {
  CHECK_THROWS_AS(count_exhaustive(Board::full(6)), LimitExceeded);
  CHECK_THROWS_AS(enumerate_tilings(Board::full(2), {4}), LimitExceeded);
  CHECK(count_exhaustive(Board::full(2), {8}).eval(1, 1) == 108);
}

TEST_CASE("board construction rejects bad parameters") {
  CHECK_THROWS_AS(Board::full(-1), std::invalid_argument);
  CHECK_THROWS_AS(Board::with_defect(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(Board::with_defect(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Board::with_defect(3, 1, 2), std::invalid_argument);
}

TEST_CASE("debug dump lists one piece per line") {
  const auto tilings = enumerate_tilings(Board::full(1));
  CHECK(format_tiling(tilings.front()) == "cube 0 0 1\ncube 1 0 1\ncube 0 1 1\ncube 1 1 1\n");
  CHECK(format_tiling(tilings.back()) == "ybrick 0 0 1\nybrick 1 0 1\n");
}
