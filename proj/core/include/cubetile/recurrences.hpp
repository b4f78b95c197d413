#pragma once

// Linear-recurrence machinery: the layer-step system matrices for the
// three tiling families, characteristic-polynomial extraction over the
// exact coefficient ring, recurrence evaluation, and the classical 1xn /
// 2xn baseline recurrences used for cross-checks.

#include <optional>
#include <stdexcept>
#include <vector>

#include "cubetile/poly2.hpp"

namespace cubetile {

struct PolyMatrix {
  int size = 0;
  std::vector<Poly2> entries;  // row-major, size*size

  PolyMatrix() = default;
  explicit PolyMatrix(int n) : size(n), entries(n * n) {}
  static PolyMatrix identity(int n);

  Poly2& at(int row, int col) { return entries[row * size + col]; }
  const Poly2& at(int row, int col) const { return entries[row * size + col]; }

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;
};

/// Monic characteristic polynomial det(xI - M); coeffs[k] is the
/// coefficient of x^k, length size+1.
struct CharPoly {
  std::vector<Poly2> coeffs;
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

/// X_n = sum_{i=1}^{order} coeffs[i-1] * X_{n-i}, valid for n >= valid_from.
/// initial holds X at indices valid_from - initial.size() .. valid_from - 1.
struct RecurrenceSpec {
  int order = 0;
  std::vector<Poly2> coeffs;
  std::vector<Poly2> initial;
  int valid_from = 0;

  int first_index() const { return valid_from - static_cast<int>(initial.size()); }
};

class NonIntegralCharPoly : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class IndexBelowRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class InvalidQ : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The 6x6 layer-step system matrix over the board states
/// (full, 1-cell, face-pair, diagonal-pair, 3-cell, capped defect).
PolyMatrix matrix_full_system();
/// The 5x5 system restricted to unbreakable continuations (first column
/// zero; capped state dropped).
PolyMatrix matrix_unbreakable_system();
/// The 3x3 bricks-only system (states full, face-pair, capped).
PolyMatrix matrix_bricks_system();

/// Vector of the six system values at n=1, matching matrix_full_system's
/// row order.
std::vector<Poly2> full_system_initial_vector();
/// First five components of the above (the unbreakable system's n=1 values).
std::vector<Poly2> unbreakable_system_initial_vector();

/// Cofactor expansion of det(xI - m); asserts that every coefficient is an
/// integer polynomial and throws NonIntegralCharPoly otherwise. Size <= 8.
CharPoly charpoly(const PolyMatrix& m);

/// alpha_i = -coeffs[order - i]; order = degree.
/// Requires initial.size() >= order.
RecurrenceSpec recurrence_from_charpoly(const CharPoly& c,
                                        std::vector<Poly2> initial,
                                        int valid_from);

/// v0 is the state vector at index 1; returns m^(n-1) * v0, the vector at
/// index n. Requires n >= 1.
std::vector<Poly2> iterate_system(const PolyMatrix& m,
                                  std::vector<Poly2> v0, int n);

/// Value at index n: stored initial value below valid_from, otherwise the
/// linear combination, computed iteratively with exact arithmetic.
Poly2 eval_recurrence(const RecurrenceSpec& spec, int n);

/// All values from spec.first_index() through up_to, inclusive.
std::vector<Poly2> recurrence_values(const RecurrenceSpec& spec, int up_to);

/// Substitutes into every coefficient and initial value.
RecurrenceSpec specialize(const RecurrenceSpec& spec,
                          const std::optional<Rational>& a_value,
                          const std::optional<Rational>& b_value);

// Reference recurrences for the three families, with exact symbolic
// coefficients and initial values. Tests re-derive each one from its
// system matrix and fail loudly on any disagreement.
RecurrenceSpec recurrence_full();         // order 6, valid from n=6
RecurrenceSpec recurrence_bricks();       // order 3, valid from n=3
RecurrenceSpec recurrence_unbreakable();  // order 4, valid from n=7 only

/// 1xn counts with a colors of squares and b colors of dominoes:
/// u_n = a*u_{n-1} + b*u_{n-2}, u_0 = 1, u_1 = a, extended by u_{-1} = 0.
Poly2 weighted_fibonacci(int n);

/// 2xn counts: X_n = (a^2+2b)X_{n-1} + a^2*b*X_{n-2} - b^3*X_{n-3}.
RecurrenceSpec recurrence_2xn();

/// 2xn counts on the {4,q} squared mosaic, q >= 4 (order-4 recurrence with
/// coefficients built from three coefficient recursions; q=4 reproduces
/// recurrence_2xn's sequence). Throws InvalidQ for q < 4.
RecurrenceSpec recurrence_2xn_mosaic(int q);

}  // namespace cubetile
