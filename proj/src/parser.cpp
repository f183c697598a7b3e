#include "weitz/parser.hpp"

#include <cctype>
#include <limits>

namespace weitz {

namespace {

class Parser {
public:
  Parser(std::string_view text, std::size_t n, Ring ring) : text_(text), n_(n), ring_(ring) {}

  std::unique_ptr<Expression> parse_all() {
    auto e = expr();
    skip_ws();
    if (pos_ < text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return e;
  }

private:
  using Ptr = std::unique_ptr<Expression>;

  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }

  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k < at && k < text_.size(); ++k) {
      if (text_[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' but reached end of input");
      fail(std::string("expected '") + c + "'");
    }
  }

  static Ptr node(Expression::Kind k) {
    auto e = std::make_unique<Expression>();
    e->kind = k;
    return e;
  }

  static Ptr binary(Expression::Kind k, Ptr a, Ptr b) {
    auto e = node(k);
    e->children.push_back(std::move(a));
    e->children.push_back(std::move(b));
    return e;
  }

  Ptr expr() {
    Ptr lhs = term();
    for (;;) {
      if (accept('+')) lhs = binary(Expression::Kind::Add, std::move(lhs), term());
      else if (accept('-')) lhs = binary(Expression::Kind::Sub, std::move(lhs), term());
      else return lhs;
    }
  }

  Ptr term() {
    Ptr lhs = unary();
    while (accept('*')) lhs = binary(Expression::Kind::Mul, std::move(lhs), unary());
    return lhs;
  }

  Ptr unary() {
    if (accept('-')) {
      auto e = node(Expression::Kind::Neg);
      e->children.push_back(unary());
      return e;
    }
    if (accept('+')) return unary();
    return power();
  }

  Ptr power() {
    Ptr base = primary();
    if (accept('^')) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '-') fail("negative exponent");
      const std::size_t at = pos_;
      const std::string digits = read_digits();
      if (digits.empty()) fail("expected a nonnegative integer exponent");
      if (digits.size() > 6) fail_at("exponent too large", at);
      auto e = node(Expression::Kind::Pow);
      e->exponent = static_cast<unsigned>(std::stoul(digits));
      e->children.push_back(std::move(base));
      return e;
    }
    return base;
  }

  std::string read_digits() {
    std::string s;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      s += text_[pos_++];
    return s;
  }

  std::size_t read_index() {
    skip_ws();
    const std::size_t at = pos_;
    const std::string digits = read_digits();
    if (digits.empty()) fail("expected an index");
    if (digits.size() > 9) fail_at("index out of range [1," + std::to_string(n_) + "]", at);
    const std::size_t v = std::stoul(digits);
    if (v < 1 || v > n_) fail_at("index out of range [1," + std::to_string(n_) + "]", at);
    return v;
  }

  Ptr primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const std::size_t start = pos_;
    const char c = text_[pos_];

    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string lit = read_digits();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        const std::string den = read_digits();
        if (den.empty()) fail("expected denominator digits");
        if (den.find_first_not_of('0') == std::string::npos) fail_at("zero denominator", start);
        lit += "/" + den;
      }
      auto e = node(Expression::Kind::Number);
      e->value = Rational(lit);
      e->value.canonicalize();
      return e;
    }

    if (c == '(') {
      ++pos_;
      Ptr inner = expr();
      expect(')');
      return inner;
    }

    if (c == 'x' || c == 'y' || c == 'u') {
      ++pos_;
      if (c == 'y' && ring_ == Ring::XU) fail_at("variable y is not allowed in the XU ring", start);
      if (c == 'u' && ring_ == Ring::XY) fail_at("variable u is not allowed in the XY ring", start);
      expect('(');
      const std::size_t i = read_index();
      if (c == 'u') {
        expect(',');
        const std::size_t j = read_index();
        expect(')');
        if (i == j) fail_at("u(i,i) is not a variable", start);
        auto e = node(Expression::Kind::VarU);
        e->i = std::min(i, j);
        e->j = std::max(i, j);
        e->flipped = i > j;
        return e;
      }
      expect(')');
      auto e = node(c == 'x' ? Expression::Kind::VarX : Expression::Kind::VarY);
      e->i = i;
      return e;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t n_;
  Ring ring_;
  std::size_t pos_ = 0;
};

template <class Poly, class Leaf>
Poly evaluate(const Expression& e, std::size_t n, Leaf leaf) {
  using K = Expression::Kind;
  switch (e.kind) {
    case K::Number: return Poly::constant(n, e.value);
    case K::Neg: return -evaluate<Poly>(*e.children[0], n, leaf);
    case K::Add: return evaluate<Poly>(*e.children[0], n, leaf) + evaluate<Poly>(*e.children[1], n, leaf);
    case K::Sub: return evaluate<Poly>(*e.children[0], n, leaf) - evaluate<Poly>(*e.children[1], n, leaf);
    case K::Mul: return evaluate<Poly>(*e.children[0], n, leaf) * evaluate<Poly>(*e.children[1], n, leaf);
    case K::Pow: return pow(evaluate<Poly>(*e.children[0], n, leaf), e.exponent);
    default: return leaf(e);
  }
}

} // namespace

std::unique_ptr<Expression> parse(std::string_view text, std::size_t n, Ring ring) {
  if (n < 1) throw ParseError("n must be at least 1", 1, 1);
  return Parser(text, n, ring).parse_all();
}

XYPolynomial evaluate_xy(const Expression& e, std::size_t n) {
  return evaluate<XYPolynomial>(e, n, [n](const Expression& v) {
    if (v.kind == Expression::Kind::VarX) return XYPolynomial::x(n, v.i);
    if (v.kind == Expression::Kind::VarY) return XYPolynomial::y(n, v.i);
    throw InvalidArgument("u-variable in an XY expression");
  });
}

UPolynomial evaluate_xu(const Expression& e, std::size_t n) {
  return evaluate<UPolynomial>(e, n, [n](const Expression& v) {
    if (v.kind == Expression::Kind::VarX) return UPolynomial::x(n, v.i);
    if (v.kind == Expression::Kind::VarU) {
      UPolynomial u = UPolynomial::u(n, v.i, v.j);
      return v.flipped ? -u : u;
    }
    throw InvalidArgument("y-variable in an XU expression");
  });
}

XYPolynomial parse_xy(std::string_view text, std::size_t n) {
  return evaluate_xy(*parse(text, n, Ring::XY), n);
}

UPolynomial parse_xu(std::string_view text, std::size_t n) {
  return evaluate_xu(*parse(text, n, Ring::XU), n);
}

XYMonomial parse_xy_monomial(std::string_view text, std::size_t n) {
  const XYPolynomial p = parse_xy(text, n);
  if (p.size() != 1 || p.terms().begin()->second != 1)
    throw ParseError("expected a single monomial with coefficient 1", 1, 1);
  return p.terms().begin()->first;
}

UMonomial parse_xu_monomial(std::string_view text, std::size_t n) {
  const UPolynomial p = parse_xu(text, n);
  if (p.size() != 1 || p.terms().begin()->second != 1)
    throw ParseError("expected a single monomial with coefficient 1", 1, 1);
  return p.terms().begin()->first;
}

} // namespace weitz
