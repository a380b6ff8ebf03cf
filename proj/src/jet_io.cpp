#include "mkpkit/jet_io.hpp"

#include <cctype>
#include <sstream>

namespace mkpkit {

// ----------------------------------------------------------------- printer

namespace {

std::string var_text(VarKey v) {
  std::ostringstream os;
  switch (v.kind()) {
    case VarKey::Kind::Indep:
      os << "txy"[int(v.indep_dir())];
      break;
    case VarKey::Kind::TimeFunc:
      os << 'f' << v.tf_index();
      for (int k = 0; k < v.tf_deriv(); ++k) os << '\'';
      break;
    case VarKey::Kind::Jet: {
      DerivIndex i = v.jet_index();
      os << "w[" << i.t << "," << i.x << "," << i.y << "]";
      break;
    }
  }
  return os.str();
}

// |coefficient| body, plus whether the printed coefficient is exactly 1
std::string coeff_text(const Scalar& c, bool* is_unit) {
  if (c.is_rational()) {
    Rational a = abs(c.rational_value());
    *is_unit = (a == 1);
    return a.get_str();
  }
  // composite field element: print verbatim inside parentheses
  *is_unit = false;
  std::ostringstream os;
  const Rational& a = c.rat_part();
  const Rational& b = c.irr_part();
  os << '(' << a.get_str();
  os << (b > 0 ? "+" : "-");
  Rational ab = abs(b);
  if (ab != 1) os << ab.get_str() << '*';
  os << "k)";
  return os.str();
}

}  // namespace

std::string to_text(const JetExpr& e) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : e.terms()) {
    bool negative = c.is_rational() && c.rational_value() < 0;
    Scalar body = negative ? -c : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;

    bool unit = false;
    std::string coef = coeff_text(body, &unit);
    bool printed = false;
    if (!unit || m.is_one()) {
      os << coef;
      printed = true;
    }
    for (const auto& [v, exp] : m.factors()) {
      if (printed) os << '*';
      os << var_text(v);
      if (exp > 1) os << '^' << exp;
      printed = true;
    }
  }
  return os.str();
}

// ------------------------------------------------------------------ parser

namespace {

class Parser {
 public:
  Parser(const std::string& text, const ParseContext& ctx)
      : text_(text), ctx_(ctx) {}

  JetExpr parse() {
    JetExpr e = expression();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return e;
  }

 private:
  JetExpr expression() {
    skip_ws();
    bool neg = false;
    if (peek() == '+' || peek() == '-') neg = (get() == '-');
    JetExpr acc = term();
    if (neg) acc = -acc;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '+' || c == '-') {
        get();
        JetExpr t = term();
        acc += (c == '-') ? -t : t;
      } else {
        return acc;
      }
    }
  }

  JetExpr term() {
    JetExpr acc = factor();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        get();
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  JetExpr factor() {
    JetExpr base = atom();
    skip_ws();
    if (peek() == '^') {
      get();
      skip_ws();
      base = base.pow(integer());
    }
    return base;
  }

  JetExpr atom() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      get();
      JetExpr e = expression();
      skip_ws();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return JetExpr::constant(rational());
    if (c == 'w') return jet_var();
    if (c == 'f') return time_func();
    if (c == 't' || c == 'x' || c == 'y') {
      get();
      Dir d = (c == 't') ? Dir::T : (c == 'x') ? Dir::X : Dir::Y;
      return JetExpr::indep(d);
    }
    if (c == 'k') {
      get();
      if (!ctx_.has_kappa) fail("symbol k has no binding in this context");
      return JetExpr::constant(ctx_.kappa);
    }
    if (c == 's') {
      get();
      char which = get();
      if (which == '1') {
        if (ctx_.sigma1 == 0) fail("symbol s1 has no binding in this context");
        return JetExpr::constant(Scalar(ctx_.sigma1));
      }
      if (which == '2') {
        if (ctx_.sigma2 == 0) fail("symbol s2 has no binding in this context");
        return JetExpr::constant(Scalar(ctx_.sigma2));
      }
      fail("unknown symbol after 's'");
    }
    fail(std::string("unexpected character '") + c + "'");
    return JetExpr::zero();
  }

  JetExpr jet_var() {
    expect('w');
    skip_ws();
    expect('[');
    int t = integer();
    expect(',');
    int x = integer();
    expect(',');
    int y = integer();
    expect(']');
    return JetExpr::w(t, x, y);
  }

  JetExpr time_func() {
    expect('f');
    char d = get();
    if (d < '1' || d > '4') fail("time function index must be 1..4");
    int derivs = 0;
    while (peek() == '\'') {
      get();
      ++derivs;
    }
    return JetExpr::tf(d - '0', derivs);
  }

  Rational rational() {
    mpz_class num = natural();
    skip_ws();
    if (peek() == '/') {
      std::size_t mark = pos_;
      get();
      skip_ws();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        mpz_class den = natural();
        Rational q(num, den);
        q.canonicalize();
        return q;
      }
      pos_ = mark;  // the '/' belonged to something else; not in grammar, but be safe
    }
    return Rational(num);
  }

  mpz_class natural() {
    skip_ws();
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits += get();
    if (digits.empty()) fail("expected a number");
    return mpz_class(digits);
  }

  int integer() {
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      get();
      neg = true;
    }
    mpz_class n = natural();
    if (!n.fits_sint_p()) fail("integer out of range");
    int v = int(n.get_si());
    return neg ? -v : v;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    get();
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() {
    if (pos_ >= text_.size()) fail("unexpected end of input");
    return text_[pos_++];
  }

  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream os;
    os << "parse error at offset " << pos_ << ": " << what;
    throw ParseError(os.str());
  }

  const std::string& text_;
  ParseContext ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

JetExpr parse_jet_expr(const std::string& text, const ParseContext& ctx) {
  return Parser(text, ctx).parse();
}

}  // namespace mkpkit
