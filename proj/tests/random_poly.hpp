#pragma once

// Seeded generators for property tests.

#include "weitz/xu_poly.hpp"
#include "weitz/xy_poly.hpp"

#include <random>

namespace weitz::testing {

inline Rational random_coefficient(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
  int a = 0;
  while (a == 0) a = num(rng);
  Rational r(a, den(rng));
  r.canonicalize();
  return r;
}

inline XYMonomial random_xy_monomial(std::mt19937_64& rng, std::size_t n, unsigned max_deg) {
  std::uniform_int_distribution<unsigned> deg(0, max_deg);
  std::uniform_int_distribution<std::size_t> var(0, 2 * n - 1);
  XYMonomial m(n);
  const unsigned d = deg(rng);
  for (unsigned k = 0; k < d; ++k) {
    const std::size_t v = var(rng);
    const std::size_t i = v / 2 + 1;
    if (v % 2 == 0) m.set_x(i, m.x_exp(i) + 1);
    else m.set_y(i, m.y_exp(i) + 1);
  }
  return m;
}

inline XYPolynomial random_xy(std::mt19937_64& rng, std::size_t n, unsigned max_deg,
                              unsigned max_terms) {
  std::uniform_int_distribution<unsigned> terms(1, max_terms);
  XYPolynomial f(n);
  const unsigned t = terms(rng);
  for (unsigned k = 0; k < t; ++k) f.add_term(random_xy_monomial(rng, n, max_deg), random_coefficient(rng));
  return f;
}

/// Random UMonomial of exact weight (x counts 1, u counts 2).
inline UMonomial random_u_monomial_of_weight(std::mt19937_64& rng, std::size_t n, unsigned weight) {
  std::vector<Exponent> x(n, 0), u(pair_count(n), 0);
  std::uniform_int_distribution<std::size_t> xi(0, n - 1);
  unsigned left = weight;
  while (left > 0) {
    const bool take_u = pair_count(n) > 0 && left >= 2 && (rng() % 2 == 0);
    if (take_u) {
      std::uniform_int_distribution<std::size_t> ui(0, pair_count(n) - 1);
      ++u[ui(rng)];
      left -= 2;
    } else {
      ++x[xi(rng)];
      left -= 1;
    }
  }
  return UMonomial(n, std::move(x), std::move(u));
}

inline UPolynomial random_u(std::mt19937_64& rng, std::size_t n, unsigned max_weight,
                            unsigned max_terms) {
  std::uniform_int_distribution<unsigned> terms(1, max_terms), w(0, max_weight);
  UPolynomial p(n);
  const unsigned t = terms(rng);
  for (unsigned k = 0; k < t; ++k)
    p.add_term(random_u_monomial_of_weight(rng, n, w(rng)), random_coefficient(rng));
  return p;
}

} // namespace weitz::testing
