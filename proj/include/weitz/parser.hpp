#pragma once

// Expression grammar:
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' integer)?
//   primary := rational | 'x(' i ')' | 'y(' i ')' | 'u(' i ',' j ')' | '(' expr ')'
//   rational := digits ('/' digits)?
// Whitespace (including newlines) is ignored between tokens.

#include "weitz/rational.hpp"
#include "weitz/xu_poly.hpp"
#include "weitz/xy_poly.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace weitz {

enum class Ring { XY, XU };

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_, column_;
};

struct Expression {
  enum class Kind { Number, VarX, VarY, VarU, Neg, Add, Sub, Mul, Pow };
  Kind kind;
  Rational value;                 // Number
  std::size_t i = 0, j = 0;       // variables; u stored with i < j
  bool flipped = false;           // u(i,j) written with i > j
  unsigned exponent = 0;          // Pow
  std::vector<std::unique_ptr<Expression>> children;
};

/// Parses and validates indices against n and the variables legal in ring.
std::unique_ptr<Expression> parse(std::string_view text, std::size_t n, Ring ring);

XYPolynomial evaluate_xy(const Expression& e, std::size_t n);
UPolynomial evaluate_xu(const Expression& e, std::size_t n);

XYPolynomial parse_xy(std::string_view text, std::size_t n);
UPolynomial parse_xu(std::string_view text, std::size_t n);

/// A single monomial like "x(1)*y(2)^2" (coefficient 1 only).
XYMonomial parse_xy_monomial(std::string_view text, std::size_t n);
UMonomial parse_xu_monomial(std::string_view text, std::size_t n);

} // namespace weitz
