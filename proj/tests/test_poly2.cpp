#include "cubetile/poly2.hpp"

#include "doctest.h"
#include "random_poly.hpp"

using namespace cubetile;
using cubetile::testing::RandomPolyGen;

namespace {
Poly2 P(const char* s) { return Poly2::parse(s); }
}  // namespace

TEST_CASE("addition: identity, cancellation, coefficient merge") {
  CHECK(P("a^2") + Poly2() == P("a^2"));
  CHECK(P("a^4+4*a^2*b+2*b^2") + P("-a^4") == P("4*a^2*b+2*b^2"));
  CHECK(P("2*b^2") + P("2*b^2") == P("4*b^2"));
}

TEST_CASE("multiplication: identity, square, monomials") {
  const Poly2 r1 = P("a^4+4*a^2*b+2*b^2");
  CHECK(r1 * Poly2(1) == r1);
  CHECK(r1 * r1 == P("a^8+8*a^6*b+20*a^4*b^2+16*a^2*b^3+4*b^4"));
  CHECK(P("b") * P("b^3") == P("b^4"));
}

TEST_CASE("eval substitutes exactly") {
  CHECK(P("a^4+4*a^2*b+2*b^2").eval(1, 1) == 7);
  CHECK(P("9*b^4").eval(0, 1) == 9);

  RandomPolyGen gen(11);
  for (int i = 0; i < 50; ++i) {
    Poly2 p = gen.poly();
    CHECK(p.eval(0, 0) == p.constant_term());
  }
}

TEST_CASE("is_integer detects fractional coefficients") {
  CHECK_FALSE(P("1/4*b^3").is_integer());
  CHECK(P("a^4+7*a^2*b+6*b^2").is_integer());
  CHECK(Poly2().is_integer());
}

TEST_CASE("canonical text format") {
  CHECK(Poly2().str() == "0");
  CHECK(P("a^4+4*a^2*b+2*b^2").str() == "a^4 + 4*a^2*b + 2*b^2");
  CHECK(Poly2::monomial(Rational(1, 4), 0, 3).str() == "1/4*b^3");
  CHECK(P("-b^12").str() == "-b^12");
  CHECK(P("a^6*b+6*a^4*b^2+6*a^2*b^3-7*b^4").str() ==
        "a^6*b + 6*a^4*b^2 + 6*a^2*b^3 - 7*b^4");
  CHECK(Poly2(-5).str() == "-5");
  CHECK(P("a").str() == "a");
  CHECK(P("a*b").str() == "a*b");
}

TEST_CASE("parse accepts star-free and spaced forms") {
  CHECK(P("4a^2b") == P("4*a^2*b"));
  CHECK(P(" a^4 + 4 * a^2 * b + 2*b^2 ") == P("a^4+4*a^2*b+2*b^2"));
  CHECK(P("0") == Poly2());
  CHECK(P("3/2") == Poly2(Rational(3, 2)));
  CHECK(P("b^2+b^2") == P("2*b^2"));
  CHECK_THROWS_AS(Poly2::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Poly2::parse("a^"), std::invalid_argument);
  CHECK_THROWS_AS(Poly2::parse("x+1"), std::invalid_argument);
  CHECK_THROWS_AS(Poly2::parse("1/0"), std::invalid_argument);
}

TEST_CASE("format/parse round-trip on random polynomials") {
  RandomPolyGen gen(23);
  for (int i = 0; i < 200; ++i) {
    Poly2 p = gen.poly();
    CHECK(Poly2::parse(p.str()) == p);
  }
}

TEST_CASE("canonical form stores no zero coefficients") {
  RandomPolyGen gen(37);
  for (int i = 0; i < 200; ++i) {
    Poly2 p = gen.poly(), q = gen.poly();
    for (const Poly2& r : {p + q, p - q, p * q, p - p}) {
      for (const auto& [m, c] : r.terms()) CHECK(c != 0);
    }
  }
}

TEST_CASE("ring axioms on random inputs") {
  RandomPolyGen gen(41);
  for (int i = 0; i < 1000; ++i) {
    Poly2 p = gen.poly(), q = gen.poly(), r = gen.poly();
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) * r == p * r + q * r);
    CHECK(p * (q * r) == (p * q) * r);
    CHECK((p + q) + r == p + (q + r));
  }
}

TEST_CASE("eval is a ring homomorphism") {
  RandomPolyGen gen(43);
  for (int i = 0; i < 1000; ++i) {
    Poly2 p = gen.poly(), q = gen.poly();
    Rational x = gen.rational(), y = gen.rational();
    CHECK((p * q).eval(x, y) == p.eval(x, y) * q.eval(x, y));
    CHECK((p + q).eval(x, y) == p.eval(x, y) + q.eval(x, y));
  }
}

TEST_CASE("substitute binds one variable at a time") {
  const Poly2 p = P("a^4+4*a^2*b+2*b^2");
  CHECK(p.substitute(Rational(1), std::nullopt) == P("1+4*b+2*b^2"));
  CHECK(p.substitute(std::nullopt, Rational(0)) == P("a^4"));
  CHECK(p.substitute(Rational(1), Rational(1)) == Poly2(7));

  RandomPolyGen gen(47);
  for (int i = 0; i < 100; ++i) {
    Poly2 p2 = gen.poly();
    Rational x = gen.rational(), y = gen.rational();
    CHECK(p2.substitute(x, y).constant_term() == p2.eval(x, y));
    CHECK(p2.substitute(x, std::nullopt).substitute(std::nullopt, y) ==
          p2.substitute(x, y));
  }
}

TEST_CASE("pow matches repeated multiplication") {
  const Poly2 p = P("a+2*b");
  Poly2 acc(1);
  for (unsigned e = 0; e <= 6; ++e) {
    CHECK(p.pow(e) == acc);
    acc *= p;
  }
  CHECK(Poly2().pow(0) == Poly2(1));
  CHECK(Poly2().pow(3) == Poly2());
}
