#include "daha/expr.hpp"

#include <cctype>

namespace daha {

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      throw ParseError(std::string("expected '") + c + "' at position " +
                       std::to_string(i) + " in \"" + s + "\"");
  }

  Int integer() {
    skip_ws();
    bool neg = eat('-');
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("expected integer at position " + std::to_string(i) +
                       " in \"" + s + "\"");
    Int v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      v = v * 10 + (s[i++] - '0');
    return neg ? -v : v;
  }

  Rat rat() {
    // "p", "-p", "p/q", also "(p/q)"
    if (eat('(')) {
      Rat r = rat();
      expect(')');
      return r;
    }
    Int num = integer();
    if (peek() == '/') {
      ++i;
      Int den = integer();
      return Rat(num, den);
    }
    return Rat(num);
  }

  IntVec int_list(char close) {
    IntVec v;
    v.push_back(integer());
    while (eat(',')) v.push_back(integer());
    expect(close);
    return v;
  }
};

struct DahaParser {
  const AffineCartanDatum& d;
  Cursor c;

  DahaElement parse() {
    DahaElement e = sum();
    if (!c.done())
      throw ParseError("trailing input at position " + std::to_string(c.i) +
                       " in \"" + c.s + "\"");
    return e;
  }

  DahaElement sum() {
    DahaElement e = product(false);
    for (;;) {
      if (c.eat('+'))
        e = add(e, product(false));
      else if (c.eat('-'))
        e = sub(e, product(false));
      else
        return e;
    }
  }

  bool at_factor() {
    char ch = c.peek();
    return ch == '(' || ch == 'T' || ch == 'X' || ch == 'Y' || ch == 'q' ||
           ch == 't' || std::isdigit(static_cast<unsigned char>(ch));
  }

  DahaElement product(bool) {
    bool neg = false;
    while (c.eat('-')) neg = !neg;
    DahaElement e = factor();
    while (at_factor()) e = multiply(d, e, factor());
    return neg ? scale(e, -Laurent::one()) : e;
  }

  DahaElement factor() {
    char ch = c.peek();
    if (ch == '(') {
      c.expect('(');
      DahaElement e = sum();
      c.expect(')');
      return e;
    }
    if (ch == 'T') {
      ++c.i;
      Int j = c.integer();
      if (j < 0 || j > d.n)
        throw ParseError("T index out of range in \"" + c.s + "\"");
      bool inv = (c.i < c.s.size() && c.s[c.i] == '\'');
      if (inv) ++c.i;
      return inv ? t_inverse(d, static_cast<int>(j))
                 : t_generator(d, static_cast<int>(j));
    }
    if (ch == 'X') {
      ++c.i;
      c.expect('[');
      IntVec coords;
      coords.push_back(c.integer());
      while (c.eat(',')) coords.push_back(c.integer());
      Int k = 0;
      if (c.eat(';')) k = c.integer();
      c.expect(']');
      if (static_cast<int>(coords.size()) != d.n)
        throw ParseError("X[...] expects " + std::to_string(d.n) +
                         " root coordinates");
      coords.push_back(k);
      return x_monomial(d, coords);
    }
    if (ch == 'Y') {
      ++c.i;
      c.expect('[');
      IntVec mu = c.int_list(']');
      if (static_cast<int>(mu.size()) != d.n)
        throw ParseError("Y[...] expects " + std::to_string(d.n) +
                         " lattice coordinates");
      return y_element(d, mu);
    }
    if (ch == 'q' || ch == 't') {
      return daha_scalar(d, coeff_monomial());
    }
    return daha_scalar(d, Laurent::rational(c.rat()));
  }

  Laurent coeff_monomial() {
    if (c.peek() == 'q') {
      ++c.i;
      Rat e(1);
      if (c.eat('^')) e = c.rat();
      return Laurent::q_pow(e);
    }
    // ts or tl
    ++c.i;
    if (c.i >= c.s.size() || (c.s[c.i] != 's' && c.s[c.i] != 'l'))
      throw ParseError("expected 'ts' or 'tl' in \"" + c.s + "\"");
    TClass cls = (c.s[c.i] == 's') ? TClass::Short : TClass::Long;
    ++c.i;
    Rat e(1);
    if (c.eat('^')) e = c.rat();
    Rat half = e * 2;
    if (!is_integer(half))
      throw ParseError("t exponents must be half-integers in \"" + c.s + "\"");
    return Laurent::t_pow(cls, to_int(half));
  }
};

}  // namespace

DahaElement parse_daha_expr(const AffineCartanDatum& d, const std::string& text) {
  DahaParser p{d, Cursor{text}};
  return p.parse();
}

AffineWeylElement parse_weyl_expr(const AffineCartanDatum& d,
                                  const std::string& text) {
  Cursor c{text};
  AffineWeylElement w = AffineWeylElement::identity(d.n);
  while (!c.done()) {
    char ch = c.peek();
    if (ch == 's') {
      ++c.i;
      Int j = c.integer();
      if (j < 0 || j > d.n)
        throw ParseError("s index out of range in \"" + text + "\"");
      w = mul(d, w, simple_affine(d, static_cast<int>(j)));
    } else if (ch == 'l') {
      ++c.i;
      c.expect('[');
      IntVec mu = c.int_list(']');
      if (static_cast<int>(mu.size()) != d.n)
        throw ParseError("l[...] expects " + std::to_string(d.n) +
                         " lattice coordinates");
      w = mul(d, w, translation(d, mu));
    } else if (ch == '*') {
      ++c.i;
    } else {
      throw ParseError("unexpected character '" + std::string(1, ch) +
                       "' in \"" + text + "\"");
    }
  }
  return w;
}

}  // namespace daha
