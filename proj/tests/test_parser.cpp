#include "doctest.h"

#include "random_poly.hpp"
#include "weitz/format.hpp"
#include "weitz/parser.hpp"

#include <random>

using namespace weitz;

TEST_CASE("parse examples") {
  const XYPolynomial f = parse_xy("x(1)*y(2) - x(2)*y(1)", 2);
  CHECK(f == pi(UPolynomial::u(2, 1, 2)));
  CHECK(parse_xu("u(2,1)", 2) == UPolynomial::u(2, 1, 2) * Rational(-1));
  CHECK(parse_xy("(x(1) + 1/2)^2", 1) == parse_xy("x(1)^2 + x(1) + 1/4", 1));
  CHECK(parse_xy("-(-3)", 1) == XYPolynomial::constant(1, 3));
  CHECK(parse_xy("6/4*x(1)", 1) == parse_xy("3/2*x(1)", 1));
  CHECK(parse_xu("x(1)^0*u(1,2)^0", 2) == UPolynomial::constant(2, 1));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_xy("y(3)", 2), ParseError);
  CHECK_THROWS_AS(parse_xy("x(0)", 2), ParseError);
  CHECK_THROWS_AS(parse_xu("y(1)", 2), ParseError);
  CHECK_THROWS_AS(parse_xy("u(1,2)", 2), ParseError);
  CHECK_THROWS_AS(parse_xu("u(1,1)", 2), ParseError);
  CHECK_THROWS_AS(parse_xy("x(1)^-1", 2), ParseError);
  CHECK_THROWS_AS(parse_xy("1/0", 2), ParseError);
  CHECK_THROWS_AS(parse_xy("x(1) +", 2), ParseError);
  CHECK_THROWS_AS(parse_xy("x(1))", 2), ParseError);

  try {
    parse_xy("x(1) +\n  y(7)", 2);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() >= 3);
  }
}

TEST_CASE("format then parse is the identity") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const XYPolynomial f = testing::random_xy(rng, n, 4, 5);
    CHECK(parse_xy(to_string(f), n) == f);
    const UPolynomial p = testing::random_u(rng, n, 6, 5);
    CHECK(parse_xu(to_string(p), n) == p);
  }
  CHECK(to_string(XYPolynomial(2)) == "0");
  CHECK(parse_xy("0", 2).is_zero());
}
