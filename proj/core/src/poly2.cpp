#include "cubetile/poly2.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cubetile {

void Poly2::add_term(const Monomial& m, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly2 Poly2::monomial(Rational coeff, int deg_a, int deg_b) {
  if (deg_a < 0 || deg_b < 0)
    throw std::invalid_argument("Poly2: negative exponent");
  Poly2 p;
  p.add_term({deg_a, deg_b}, std::move(coeff));
  return p;
}

bool Poly2::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
}

bool Poly2::is_integer() const {
  for (const auto& [m, c] : terms_)
    if (c.get_den() != 1) return false;
  return true;
}

Rational Poly2::constant_term() const {
  auto it = terms_.find({0, 0});
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly2::degree_a() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.deg_a);
  return d;
}

int Poly2::degree_b() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.deg_b);
  return d;
}

Poly2& Poly2::operator+=(const Poly2& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Poly2& Poly2::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

Poly2 operator*(const Poly2& lhs, const Poly2& rhs) {
  Poly2 out;
  for (const auto& [ml, cl] : lhs.terms_)
    for (const auto& [mr, cr] : rhs.terms_)
      out.add_term({ml.deg_a + mr.deg_a, ml.deg_b + mr.deg_b}, cl * cr);
  return out;
}

Poly2 Poly2::operator-() const {
  Poly2 out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Poly2 Poly2::pow(unsigned exponent) const {
  Poly2 result(1);
  Poly2 base(*this);
  while (exponent != 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent != 0) base *= base;
  }
  return result;
}

Rational Poly2::eval(const Rational& a_value, const Rational& b_value) const {
  // Power tables up to the highest exponent actually present.
  const int da = degree_a(), db = degree_b();
  std::vector<Rational> pa{Rational(1)}, pb{Rational(1)};
  pa.reserve(da + 1);
  pb.reserve(db + 1);
  for (int i = 1; i <= da; ++i) pa.push_back(pa.back() * a_value);
  for (int j = 1; j <= db; ++j) pb.push_back(pb.back() * b_value);

  Rational total(0);
  for (const auto& [m, c] : terms_) total += c * pa[m.deg_a] * pb[m.deg_b];
  return total;
}

Poly2 Poly2::substitute(const std::optional<Rational>& a_value,
                        const std::optional<Rational>& b_value) const {
  Poly2 out;
  for (const auto& [m, c] : terms_) {
    Rational coeff = c;
    Monomial nm = m;
    if (a_value) {
      Rational p(1);
      for (int i = 0; i < m.deg_a; ++i) p *= *a_value;
      coeff *= p;
      nm.deg_a = 0;
    }
    if (b_value) {
      Rational p(1);
      for (int j = 0; j < m.deg_b; ++j) p *= *b_value;
      coeff *= p;
      nm.deg_b = 0;
    }
    out.add_term(nm, coeff);
  }
  return out;
}

namespace {

void append_var(std::string& s, char name, int deg, bool& first_factor) {
  if (deg == 0) return;
  if (!first_factor) s += '*';
  s += name;
  if (deg != 1) {
    s += '^';
    s += std::to_string(deg);
  }
  first_factor = false;
}

}  // namespace

std::string Poly2::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first_term = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    if (first_term) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first_term = false;

    Rational mag = negative ? Rational(-c) : c;
    bool first_factor = true;
    const bool has_vars = m.deg_a > 0 || m.deg_b > 0;
    if (mag != 1 || !has_vars) {
      out += mag.get_str();
      first_factor = false;
    }
    append_var(out, 'a', m.deg_a, first_factor);
    append_var(out, 'b', m.deg_b, first_factor);
  }
  return out;
}

namespace {

struct Parser {
  std::string_view text;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("Poly2::parse: " + what + " at offset " +
                                std::to_string(pos) + " in \"" +
                                std::string(text) + "\"");
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eof() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() const { return text[pos]; }

  Integer read_integer() {
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected digits");
    return Integer(std::string(text.substr(start, pos - start)), 10);
  }

  int read_exponent() {
    skip_ws();
    Integer e = read_integer();
    if (!e.fits_sint_p()) fail("exponent out of range");
    return static_cast<int>(e.get_si());
  }

  // One term: [coefficient] [variable factors].
  void read_term(Poly2::TermMap& terms, bool negative) {
    skip_ws();
    Rational coeff(1);
    bool saw_anything = false;

    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num = read_integer();
      Integer den(1);
      skip_ws();
      if (pos < text.size() && peek() == '/') {
        ++pos;
        skip_ws();
        den = read_integer();
        if (den == 0) fail("zero denominator");
      }
      coeff = Rational(num, den);
      coeff.canonicalize();
      saw_anything = true;
    }

    int deg_a = 0, deg_b = 0;
    while (true) {
      skip_ws();
      size_t mark = pos;
      if (pos < text.size() && peek() == '*') {
        ++pos;
        skip_ws();
      }
      if (pos < text.size() && (peek() == 'a' || peek() == 'b')) {
        char var = peek();
        ++pos;
        int deg = 1;
        skip_ws();
        if (pos < text.size() && peek() == '^') {
          ++pos;
          deg = read_exponent();
        }
        (var == 'a' ? deg_a : deg_b) += deg;
        saw_anything = true;
      } else {
        pos = mark;  // the '*' (if any) was not ours
        break;
      }
    }

    if (!saw_anything) fail("expected a term");
    if (negative) coeff = -coeff;
    if (coeff == 0) return;
    auto [it, inserted] = terms.try_emplace({deg_a, deg_b}, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms.erase(it);
    }
  }
};

}  // namespace

Poly2 Poly2::parse(std::string_view text) {
  Parser p{text};
  TermMap terms;

  if (p.eof()) p.fail("empty input");
  bool negative = false;
  if (p.peek() == '-' || p.peek() == '+') {
    negative = p.peek() == '-';
    ++p.pos;
  }
  p.read_term(terms, negative);
  while (!p.eof()) {
    char sign = p.peek();
    if (sign != '+' && sign != '-') p.fail("expected '+' or '-'");
    ++p.pos;
    p.read_term(terms, sign == '-');
  }

  Poly2 out;
  out.terms_ = std::move(terms);
  return out;
}

}  // namespace cubetile
