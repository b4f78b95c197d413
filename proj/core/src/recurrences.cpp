#include "cubetile/recurrences.hpp"

#include <string_view>
#include <utility>

namespace cubetile {

namespace {

Poly2 P(std::string_view text) { return Poly2::parse(text); }

// Univariate polynomial in x with Poly2 coefficients; index = power of x.
using XPoly = std::vector<Poly2>;

XPoly xmul(const XPoly& lhs, const XPoly& rhs) {
  XPoly out(lhs.size() + rhs.size() - 1);
  for (size_t i = 0; i < lhs.size(); ++i)
    for (size_t j = 0; j < rhs.size(); ++j)
      out[i + j] += lhs[i] * rhs[j];
  return out;
}

void xadd_scaled(XPoly& acc, const XPoly& term, bool negate) {
  if (acc.size() < term.size()) acc.resize(term.size());
  for (size_t i = 0; i < term.size(); ++i) {
    if (negate)
      acc[i] -= term[i];
    else
      acc[i] += term[i];
  }
}

// Determinant by cofactor expansion along the first row.
XPoly xdet(const std::vector<std::vector<XPoly>>& m) {
  const size_t n = m.size();
  if (n == 1) return m[0][0];
  XPoly total{Poly2()};
  std::vector<std::vector<XPoly>> minor(n - 1, std::vector<XPoly>(n - 1));
  for (size_t col = 0; col < n; ++col) {
    for (size_t i = 1; i < n; ++i) {
      size_t k = 0;
      for (size_t j = 0; j < n; ++j) {
        if (j == col) continue;
        minor[i - 1][k++] = m[i][j];
      }
    }
    xadd_scaled(total, xmul(m[0][col], xdet(minor)), col % 2 != 0);
  }
  return total;
}

}  // namespace

PolyMatrix PolyMatrix::identity(int n) {
  PolyMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Poly2(1);
  return m;
}

// Layer-step system over the six board states. Entry (j,k) is the weighted
// number of ways one layer extends a k-state board to a j-state board; the
// capped state contributes through column 5 with the 1/4 factor that
// cancels its position multiplicity.
PolyMatrix matrix_full_system() {
  static const char* rows[6][6] = {
      {"a^4+4*a^2*b+2*b^2", "a^3*b+2*a*b^2", "a^2*b^2+b^3", "a^2*b^2", "a*b^3", "1/4*b^3"},
      {"4*a^3+8*a*b", "3*a^2*b+2*b^2", "2*a*b^2", "2*a*b^2", "b^3", "0"},
      {"4*a^2+4*b", "2*a*b", "b^2", "0", "0", "0"},
      {"2*a^2", "a*b", "0", "b^2", "0", "0"},
      {"4*a", "b", "0", "0", "0", "0"},
      {"4*b", "0", "0", "0", "0", "0"},
  };
  PolyMatrix m(6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) m.at(i, j) = P(rows[i][j]);
  return m;
}

PolyMatrix matrix_unbreakable_system() {
  static const char* rows[5][5] = {
      {"0", "a^3*b+2*a*b^2", "a^2*b^2+b^3", "a^2*b^2", "a*b^3"},
      {"0", "3*a^2*b+2*b^2", "2*a*b^2", "2*a*b^2", "b^3"},
      {"0", "2*a*b", "b^2", "0", "0"},
      {"0", "a*b", "0", "b^2", "0"},
      {"0", "b", "0", "0", "0"},
  };
  PolyMatrix m(5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) m.at(i, j) = P(rows[i][j]);
  return m;
}

PolyMatrix matrix_bricks_system() {
  static const char* rows[3][3] = {
      {"2*b^2", "b^3", "1/4*b^3"},
      {"4*b", "b^2", "0"},
      {"4*b", "0", "0"},
  };
  PolyMatrix m(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = P(rows[i][j]);
  return m;
}

std::vector<Poly2> full_system_initial_vector() {
  return {P("a^4+4*a^2*b+2*b^2"), P("4*a^3+8*a*b"), P("4*a^2+4*b"),
          P("2*a^2"), P("4*a"), P("4*b")};
}

std::vector<Poly2> unbreakable_system_initial_vector() {
  auto v = full_system_initial_vector();
  v.resize(5);
  return v;
}

CharPoly charpoly(const PolyMatrix& m) {
  if (m.size < 1 || m.size > 8)
    throw std::invalid_argument("charpoly: size must be 1..8");

  std::vector<std::vector<XPoly>> xm(m.size, std::vector<XPoly>(m.size));
  for (int i = 0; i < m.size; ++i)
    for (int j = 0; j < m.size; ++j) {
      XPoly cell{-m.at(i, j)};
      if (i == j) cell.push_back(Poly2(1));
      xm[i][j] = std::move(cell);
    }

  CharPoly c{xdet(xm)};
  c.coeffs.resize(m.size + 1);
  for (const Poly2& coeff : c.coeffs)
    if (!coeff.is_integer())
      throw NonIntegralCharPoly("charpoly: non-integral coefficient " +
                                coeff.str());
  return c;
}

RecurrenceSpec recurrence_from_charpoly(const CharPoly& c,
                                        std::vector<Poly2> initial,
                                        int valid_from) {
  const int order = c.degree();
  if (static_cast<int>(initial.size()) < order)
    throw std::invalid_argument("recurrence_from_charpoly: need at least " +
                                std::to_string(order) + " initial values");
  std::vector<Poly2> alphas(order);
  for (int i = 1; i <= order; ++i) alphas[i - 1] = -c.coeffs[order - i];
  return RecurrenceSpec{order, std::move(alphas), std::move(initial), valid_from};
}

std::vector<Poly2> iterate_system(const PolyMatrix& m, std::vector<Poly2> v0,
                                  int n) {
  if (static_cast<int>(v0.size()) != m.size)
    throw std::invalid_argument("iterate_system: vector/matrix size mismatch");
  if (n < 1) throw std::invalid_argument("iterate_system: need n >= 1");

  std::vector<Poly2> v = std::move(v0);
  std::vector<Poly2> next(m.size);
  for (int step = 1; step < n; ++step) {
    for (int i = 0; i < m.size; ++i) {
      Poly2 sum;
      for (int j = 0; j < m.size; ++j) sum += m.at(i, j) * v[j];
      next[i] = std::move(sum);
    }
    v.swap(next);
  }
  return v;
}

std::vector<Poly2> recurrence_values(const RecurrenceSpec& spec, int up_to) {
  if (up_to < spec.first_index())
    throw IndexBelowRange("recurrence_values: index " + std::to_string(up_to) +
                          " below first supported index " +
                          std::to_string(spec.first_index()));
  std::vector<Poly2> values(spec.initial.begin(), spec.initial.end());
  for (int n = spec.valid_from; n <= up_to; ++n) {
    Poly2 sum;
    for (int i = 1; i <= spec.order; ++i)
      sum += spec.coeffs[i - 1] * values[n - i - spec.first_index()];
    values.push_back(std::move(sum));
  }
  values.resize(up_to - spec.first_index() + 1);
  return values;
}

Poly2 eval_recurrence(const RecurrenceSpec& spec, int n) {
  return recurrence_values(spec, n).back();
}

RecurrenceSpec specialize(const RecurrenceSpec& spec,
                          const std::optional<Rational>& a_value,
                          const std::optional<Rational>& b_value) {
  RecurrenceSpec out = spec;
  for (Poly2& c : out.coeffs) c = c.substitute(a_value, b_value);
  for (Poly2& v : out.initial) v = v.substitute(a_value, b_value);
  return out;
}

RecurrenceSpec recurrence_full() {
  return RecurrenceSpec{
      6,
      {P("a^4+7*a^2*b+6*b^2"),
       P("a^6*b+6*a^4*b^2+6*a^2*b^3-7*b^4"),
       P("-2*a^6*b^3-10*a^4*b^4-26*a^2*b^5-8*b^6"),
       P("a^6*b^5+2*a^4*b^6+6*a^2*b^7+9*b^8"),
       P("a^4*b^8-a^2*b^9+2*b^10"),
       P("-b^12")},
      {P("1"),
       P("a^4+4*a^2*b+2*b^2"),
       P("a^8+12*a^6*b+42*a^4*b^2+44*a^2*b^3+9*b^4"),
       P("a^12+20*a^10*b+142*a^8*b^2+440*a^6*b^3+588*a^4*b^4+288*a^2*b^5+32*b^6"),
       P("a^16+28*a^14*b+306*a^12*b^2+1672*a^10*b^3+4863*a^8*b^4+7416*a^6*b^5"
         "+5470*a^4*b^6+1620*a^2*b^7+121*b^8"),
       P("a^20+36*a^18*b+534*a^16*b^2+4248*a^14*b^3+19774*a^12*b^4+55200*a^10*b^5"
         "+91200*a^8*b^6+84984*a^6*b^7+40553*a^4*b^8+8204*a^2*b^9+450*b^10")},
      6};
}

RecurrenceSpec recurrence_bricks() {
  return RecurrenceSpec{3,
                        {P("3*b^2"), P("3*b^4"), P("-b^6")},
                        {P("1"), P("2*b^2"), P("9*b^4")},
                        3};
}

RecurrenceSpec recurrence_unbreakable() {
  // The relation holds from n=7 only; the stored values 0..6 include the
  // corrected n=2 value (the four-brick column tiling enters separately).
  return RecurrenceSpec{
      4,
      {P("3*a^2*b+4*b^2"), P("-4*b^4"), P("-3*a^2*b^5"), P("b^8")},
      {P("1"),
       P("a^4+4*a^2*b+2*b^2"),
       P("4*a^6*b+22*a^4*b^2+28*a^2*b^3+5*b^4"),
       P("12*a^8*b^2+80*a^6*b^3+158*a^4*b^4+88*a^2*b^5+4*b^6"),
       P("36*a^10*b^3+288*a^8*b^4+776*a^6*b^5+798*a^4*b^6+252*a^2*b^7+4*b^8"),
       P("108*a^12*b^4+1008*a^10*b^5+3420*a^8*b^6+5112*a^6*b^7+3234*a^4*b^8"
         "+656*a^2*b^9+4*b^10"),
       P("324*a^14*b^5+3456*a^12*b^6+14112*a^10*b^7+27624*a^8*b^8+26576*a^6*b^9"
         "+11470*a^4*b^10+1644*a^2*b^11+4*b^12")},
      7};
}

Poly2 weighted_fibonacci(int n) {
  if (n < -1) throw IndexBelowRange("weighted_fibonacci: defined for n >= -1");
  if (n == -1) return Poly2();
  Poly2 prev;            // u_{-1}
  Poly2 curr = Poly2(1);  // u_0
  const Poly2 a = Poly2::var_a(), b = Poly2::var_b();
  for (int i = 1; i <= n; ++i) {
    Poly2 next = a * curr + b * prev;
    prev = std::move(curr);
    curr = std::move(next);
  }
  return curr;
}

RecurrenceSpec recurrence_2xn() {
  return RecurrenceSpec{3,
                        {P("a^2+2*b"), P("a^2*b"), P("-b^3")},
                        {P("1"), P("a^2+b"), P("a^4+4*a^2*b+2*b^2")},
                        3};
}

RecurrenceSpec recurrence_2xn_mosaic(int q) {
  if (q < 4) throw InvalidQ("recurrence_2xn_mosaic: q must be >= 4");
  const Poly2 a = Poly2::var_a(), b = Poly2::var_b();

  // Three coefficient recursions, iterated up from their base values.
  Poly2 alpha_lo = P("a^2+b"), alpha_hi = P("a^3+3*a*b");
  for (int i = 4; i < q; ++i) {
    Poly2 next = a * alpha_hi + b * alpha_lo;
    alpha_lo = std::move(alpha_hi);
    alpha_hi = std::move(next);
  }
  const Poly2 alpha = alpha_lo;

  Poly2 beta0 = P("2*a^2*b+2*b^2");                    // index 4
  Poly2 beta1 = P("a^4*b+3*a^2*b^2+2*b^3");            // index 5
  Poly2 beta2 = P("a^6*b+6*a^4*b^2+10*a^2*b^3+2*b^4");  // index 6
  for (int i = 4; i < q; ++i) {
    Poly2 next = (a * a + b) * beta2 + b * (a * a + b) * beta1 - b.pow(3) * beta0;
    beta0 = std::move(beta1);
    beta1 = std::move(beta2);
    beta2 = std::move(next);
  }
  const Poly2 beta = beta0;

  Poly2 gamma_lo = P("a^2*b^2-b^3");       // index 4
  Poly2 gamma_hi = P("-a^3*b^3-a*b^4");    // index 5
  for (int i = 4; i < q; ++i) {
    Poly2 next = -(a * b) * gamma_hi + b.pow(3) * gamma_lo;
    gamma_lo = std::move(gamma_hi);
    gamma_hi = std::move(next);
  }
  const Poly2 gamma = gamma_lo;

  const Poly2 u2 = weighted_fibonacci(q - 2);
  const Poly2 u3 = weighted_fibonacci(q - 3);
  const Poly2 u4 = weighted_fibonacci(q - 4);
  const Poly2 u5 = weighted_fibonacci(q - 5);

  const Poly2 r0(1);
  const Poly2 r1 = u2;
  const Poly2 r2 = u2 * u2 + a * b * u4 * u3 + b * u3 * u3 + b * b * u4 * u4;
  const Poly2 r3 =
      (u2 * u2 + Rational(2) * (a * b * u4 * u3) + Rational(2) * (b * u3 * u3) +
       Rational(2) * (b * b * u4 * u4)) * u2 +
      b * b * (u3 * u4 + (a * a + b) * u4 * u5 + a * u4 * u4) * u3 +
      a * b.pow(3) * u4 * u4 * u5;

  return RecurrenceSpec{4,
                        {alpha, beta, gamma, -Poly2::var_b().pow(2 * (q - 2))},
                        {r0, r1, r2, r3},
                        4};
}

}  // namespace cubetile
