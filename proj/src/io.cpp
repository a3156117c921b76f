#include "qgr/io.hpp"

#include <cctype>
#include <charconv>

namespace qgr {

namespace {

// Minimal cursor over a literal; all errors carry the current offset.
struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos); }

  long long integer() {
    std::size_t start = pos;
    if (peek() == '-' || peek() == '+') ++pos;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
    long long value = 0;
    auto r = std::from_chars(s.data() + start, s.data() + pos, value);
    if (r.ec != std::errc{}) throw ParseError("integer out of range", start);
    return value;
  }

  // Optional unsigned integer; returns fallback when the next char is not a digit.
  long long opt_uint(long long fallback) {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) return fallback;
    return integer();
  }
};

int as_int(Cursor& c, long long v) {
  if (v > 1000000 || v < -1000000) c.fail("exponent/index out of range");
  return static_cast<int>(v);
}

// sign? coeff? 'v' ('^' int)?  |  sign? int
void laurent_term(Cursor& c, LaurentInt& out) {
  Int sign = 1;
  if (c.eat('-'))
    sign = -1;
  else
    c.eat('+');
  bool had_digits = std::isdigit(static_cast<unsigned char>(c.peek()));
  Int coeff = c.opt_uint(1);
  if (c.eat('v')) {
    int exp = 1;
    if (c.eat('^')) exp = as_int(c, c.integer());
    out.add_term(exp, checked_mul(sign, coeff));
  } else {
    if (!had_digits) c.fail("expected term");
    out.add_term(0, checked_mul(sign, coeff));
  }
}

LaurentInt laurent_body(Cursor& c) {
  LaurentInt p;
  if (c.peek() == '0' && c.pos + 1 == c.s.size()) {
    ++c.pos;
    return p;
  }
  laurent_term(c, p);
  while (c.peek() == '+' || c.peek() == '-') laurent_term(c, p);
  return p;
}

// i:k:c entries between braces, 1-based node indices.
template <class Elem>
Elem braced_ikc(Cursor& c, char tag) {
  c.expect(tag);
  c.expect('{');
  Elem e;
  if (!c.eat('}')) {
    do {
      int i = as_int(c, c.integer());
      if (i < 1) c.fail("node index must be >= 1");
      c.expect(':');
      int k = as_int(c, c.integer());
      c.expect(':');
      Int g = c.integer();
      e.add_term(i - 1, k, g);
    } while (c.eat(','));
    c.expect('}');
  }
  return e;
}

// Rank-1 spectral shorthand inside e[...]: sum of c? q^k terms on node 1.
XElem rank1_body(Cursor& c) {
  XElem x;
  do {
    Int sign = 1;
    if (c.eat('-'))
      sign = -1;
    else
      c.eat('+');
    Int coeff = c.opt_uint(1);
    c.expect('q');
    c.expect('^');
    int k = as_int(c, c.integer());
    x.add_term(0, k, checked_mul(sign, coeff));
  } while (c.peek() == '+' || c.peek() == '-');
  return x;
}

XElem exp_body(Cursor& c) {
  c.expect('e');
  c.expect('[');
  XElem x;
  if (c.eat(']')) return x;
  if (c.peek() == 'x')
    x = braced_ikc<XElem>(c, 'x');
  else
    x = rank1_body(c);
  c.expect(']');
  return x;
}

// One AXElem term: '(' laurent ')' '*' e[...]  |  v-monomial '*' e[...]  |  e[...]
void ax_term(Cursor& c, AXElem& out, Int sign) {
  LaurentInt coeff = LaurentInt::one();
  if (c.eat('(')) {
    coeff = laurent_body(c);
    c.expect(')');
    c.expect('*');
  } else if (c.peek() != 'e') {
    LaurentInt p;
    laurent_term(c, p);
    coeff = p;
    c.expect('*');
  }
  XElem x = exp_body(c);
  if (sign < 0) coeff = -coeff;
  out.add_term(x, coeff);
}

}  // namespace

std::string print_laurent(const LaurentInt& p) { return p.str('v'); }

namespace {
template <class Elem>
std::string print_ikc(const Elem& e, char tag) {
  std::string out{tag};
  out += '{';
  bool first = true;
  for (const auto& [ik, g] : e.c) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(ik.first + 1);
    out += ':';
    out += std::to_string(ik.second);
    out += ':';
    out += std::to_string(g);
  }
  out += '}';
  return out;
}
}  // namespace

std::string print_x(const XElem& x) { return print_ikc(x, 'x'); }
std::string print_y(const YElem& y) { return print_ikc(y, 'y'); }

std::string print_weight(const Weight& w) {
  std::string out = "w{";
  bool first = true;
  for (int i = 0; i < w.rank(); ++i) {
    if (w.c[i] == 0) continue;
    if (!first) out += ',';
    first = false;
    out += std::to_string(i + 1);
    out += ':';
    out += std::to_string(w.c[i]);
  }
  out += '}';
  return out;
}

std::string print_ax(const AXElem& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [x, p] : a.c) {
    if (!out.empty()) out += '+';
    if (!p.is_one()) {
      out += '(';
      out += p.str('v');
      out += ")*";
    }
    out += "e[";
    out += print_x(x);
    out += ']';
  }
  return out;
}

LaurentInt parse_laurent(std::string_view text) {
  Cursor c{text};
  LaurentInt p = laurent_body(c);
  if (!c.done()) c.fail("trailing input");
  return p;
}

XElem parse_x(std::string_view text) {
  Cursor c{text};
  XElem x = braced_ikc<XElem>(c, 'x');
  if (!c.done()) c.fail("trailing input");
  return x;
}

YElem parse_y(std::string_view text) {
  Cursor c{text};
  YElem y = braced_ikc<YElem>(c, 'y');
  if (!c.done()) c.fail("trailing input");
  return y;
}

Weight parse_weight(std::string_view text, int rank) {
  Cursor c{text};
  c.expect('w');
  c.expect('{');
  Weight w(rank);
  if (!c.eat('}')) {
    do {
      int i = as_int(c, c.integer());
      if (i < 1 || i > rank) c.fail("node index out of range");
      c.expect(':');
      w.c[i - 1] = checked_add(w.c[i - 1], c.integer());
    } while (c.eat(','));
    c.expect('}');
  }
  if (!c.done()) c.fail("trailing input");
  return w;
}

AXElem parse_ax(std::string_view text) {
  Cursor c{text};
  if (c.peek() == '0' && text.size() == 1) return AXElem{};
  // Bare q^n abbreviates e[q^n].
  if (c.peek() == 'q') {
    XElem x = rank1_body(c);
    if (!c.done()) c.fail("trailing input");
    return ax_basis(x);
  }
  AXElem a;
  ax_term(c, a, 1);
  while (true) {
    if (c.eat('+'))
      ax_term(c, a, 1);
    else if (c.eat('-'))
      ax_term(c, a, -1);
    else
      break;
  }
  if (!c.done()) c.fail("trailing input");
  return a;
}

}  // namespace qgr
