#pragma once

// Sparse bivariate polynomials in the color variables a (cubes) and b
// (bricks) over arbitrary-precision rationals. Every count produced by
// this library is a Poly2; plain integer sequences are the a=b=1 (or a=0,
// b=1) specialization.
//
// Values are immutable in spirit: all operations return new polynomials
// and never mutate shared state, so Poly2 is safe to share across threads.

#include <gmpxx.h>

#include <compare>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace cubetile {

using Rational = mpq_class;
using Integer = mpz_class;

/// Exponent pair of one term: a^deg_a * b^deg_b.
struct Monomial {
  int deg_a = 0;
  int deg_b = 0;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

class Poly2 {
 public:
  // Canonical term order: deg_a descending, then deg_b descending.
  // Iteration order of the map is the printing order.
  using TermMap = std::map<Monomial, Rational, std::greater<Monomial>>;

  struct Term {
    Rational coeff;
    int deg_a = 0;
    int deg_b = 0;
  };

  Poly2() = default;  // zero polynomial
  Poly2(long value) { add_term({0, 0}, Rational(value)); }
  explicit Poly2(Rational value) { add_term({0, 0}, std::move(value)); }
  Poly2(std::initializer_list<Term> terms) {
    for (const Term& t : terms) add_term({t.deg_a, t.deg_b}, t.coeff);
  }

  static Poly2 var_a() { return monomial(1, 1, 0); }
  static Poly2 var_b() { return monomial(1, 0, 1); }
  static Poly2 monomial(Rational coeff, int deg_a, int deg_b);

  /// Parses the canonical text format produced by str(), e.g.
  /// "a^4 + 4*a^2*b + 2*b^2" or "1/4*b^3". The '*' separators are
  /// optional on input. Throws std::invalid_argument on malformed text.
  static Poly2 parse(std::string_view text);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// True iff every coefficient has denominator 1.
  bool is_integer() const;
  const TermMap& terms() const { return terms_; }
  Rational constant_term() const;
  int degree_a() const;
  int degree_b() const;

  Poly2& operator+=(const Poly2& rhs);
  Poly2& operator-=(const Poly2& rhs);
  Poly2& operator*=(const Poly2& rhs) { return *this = *this * rhs; }
  Poly2& operator*=(const Rational& scalar);

  friend Poly2 operator+(Poly2 lhs, const Poly2& rhs) { return lhs += rhs; }
  friend Poly2 operator-(Poly2 lhs, const Poly2& rhs) { return lhs -= rhs; }
  friend Poly2 operator*(const Poly2& lhs, const Poly2& rhs);
  friend Poly2 operator*(Poly2 lhs, const Rational& scalar) { return lhs *= scalar; }
  friend Poly2 operator*(const Rational& scalar, Poly2 rhs) { return rhs *= scalar; }
  Poly2 operator-() const;

  Poly2 pow(unsigned exponent) const;

  /// Exact substitution of both variables.
  Rational eval(const Rational& a_value, const Rational& b_value) const;

  /// Substitutes any subset of the variables, returning a polynomial in
  /// the remaining ones (a constant polynomial if both are bound).
  Poly2 substitute(const std::optional<Rational>& a_value,
                   const std::optional<Rational>& b_value) const;

  /// Canonical text: terms in map order, coefficient elided when +/-1,
  /// exponents 0 and 1 elided, "0" for the zero polynomial.
  std::string str() const;

  friend bool operator==(const Poly2&, const Poly2&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Poly2& p) {
    return os << p.str();
  }

 private:
  void add_term(const Monomial& m, const Rational& coeff);

  TermMap terms_;
};

}  // namespace cubetile
