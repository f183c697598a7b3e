#include "doctest.h"

#include "random_poly.hpp"
#include "weitz/constants_kernel.hpp"
#include "weitz/format.hpp"
#include "weitz/parser.hpp"
#include "weitz/xu_poly.hpp"

#include <random>

using namespace weitz;

namespace {
UPolynomial U(const char* s, std::size_t n) { return parse_xu(s, n); }
UMonomial M(const char* s, std::size_t n) { return parse_xu_monomial(s, n); }
XYPolynomial P(const char* s, std::size_t n) { return parse_xy(s, n); }
} // namespace

TEST_CASE("pair indexing round-trips") {
  for (std::size_t n = 2; n <= 7; ++n) {
    std::size_t pos = 0;
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j, ++pos) {
        CHECK(pair_index(n, i, j) == pos);
        CHECK(pair_at(n, pos) == std::pair{i, j});
      }
    CHECK(pos == pair_count(n));
  }
}

TEST_CASE("pi") {
  CHECK(pi(U("u(1,2)", 2)) == P("x(1)*y(2) - x(2)*y(1)", 2));
  CHECK(pi(make_s(3, 1, 2, 3).poly).is_zero());
  CHECK(pi(make_r(4, 1, 2, 3, 4).poly).is_zero());
  CHECK(pi(U("u(2,1)", 2)) == P("x(2)*y(1) - x(1)*y(2)", 2));
}

TEST_CASE("pi is a ring homomorphism into ker Delta") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const UPolynomial a = testing::random_u(rng, n, 4, 3);
    const UPolynomial b = testing::random_u(rng, n, 4, 3);
    CHECK(pi(a + b) == pi(a) + pi(b));
    CHECK(pi(a * b) == pi(a) * pi(b));
    CHECK(is_constant(pi(a)));
  }
}

TEST_CASE("dill_compare") {
  CHECK(dill_compare(M("x(2)*u(1,3)", 3), M("x(1)*u(2,3)", 3)) > 0);
  CHECK(dill_compare(M("u(1,3)*u(2,4)", 4), M("u(1,4)*u(2,3)", 4)) > 0);
  CHECK(dill_compare(M("u(1,3)*u(2,4)", 4), M("u(1,2)*u(3,4)", 4)) > 0);
  CHECK(dill_compare(M("u(1,2)*u(3,4)", 4), M("u(1,2)*u(3,4)", 4)) == 0);
  // X-degree decides before U-degree
  CHECK(dill_compare(M("x(1)", 2), M("u(1,2)", 2)) > 0);
  // Reverse-lex on omega: x_1 beats x_2
  CHECK(dill_compare(M("x(1)", 2), M("x(2)", 2)) > 0);
  CHECK_THROWS_AS(dill_compare(M("x(1)", 2), M("x(1)", 3)), DimensionMismatch);
}

TEST_CASE("lead_dill") {
  CHECK(lead_dill(make_r(4, 1, 2, 3, 4).poly) == M("u(1,3)*u(2,4)", 4));
  CHECK(lead_dill(make_s(3, 1, 2, 3).poly) == M("x(2)*u(1,3)", 3));
  CHECK(lead_dill(U("x(1) + u(1,2)", 2)) == M("x(1)", 2));
  CHECK_THROWS_AS(lead_dill(UPolynomial(3)), ZeroPolynomial);
}

TEST_CASE("relation set") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const RelationSet rel = RelationSet::standard(n);
    const std::size_t c3 = n * (n - 1) * (n - 2) / 6;
    const std::size_t c4 = n < 4 ? 0 : n * (n - 1) * (n - 2) * (n - 3) / 24;
    CHECK(rel.count(RelationKind::S) == c3);
    CHECK(rel.count(RelationKind::R) == c4);
    for (const auto& r : rel.relations()) {
      const auto& [i, j, k, l] = r.idx;
      if (r.kind == RelationKind::S)
        CHECK(r.lead == UMonomial::x(n, j) * UMonomial::u(n, i, k));
      else
        CHECK(r.lead == UMonomial::u(n, i, k) * UMonomial::u(n, j, l));
      CHECK(r.lead_coefficient == -1);
    }
  }
  CHECK_THROWS_AS(make_s(3, 2, 1, 3), InvalidArgument);
  CHECK_THROWS_AS(make_r(4, 1, 2, 3, 5), InvalidArgument);
}

TEST_CASE("normal_form") {
  CHECK(normal_form(U("u(1,3)*u(2,4)", 4)) == U("u(1,2)*u(3,4) + u(1,4)*u(2,3)", 4));
  CHECK(normal_form(U("x(2)*u(1,3)", 3)) == U("x(1)*u(2,3) + x(3)*u(1,2)", 3));
  CHECK(normal_form(U("u(1,2)*u(3,4)", 4)) == U("u(1,2)*u(3,4)", 4));
  CHECK(normal_form(UPolynomial(4)).is_zero());
}

TEST_CASE("normal_form properties") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 3 + trial % 3;
    const RelationSet rel = RelationSet::standard(n);
    const UPolynomial p = testing::random_u(rng, n, 6, 4);
    const UPolynomial nf = normal_form(p, rel);

    // idempotent, pi-preserving, confluent
    CHECK(normal_form(nf, rel) == nf);
    CHECK(pi(nf) == pi(p));
    CHECK(normal_form(p, rel, ReductionStrategy::SmallestFirst) == nf);
    for (const auto& [m, c] : nf.terms()) CHECK(rel.first_reducer(m) == nullptr);

    // ideal membership: a combination of relations reduces to zero and has pi = 0
    UPolynomial ideal_elem(n);
    std::uniform_int_distribution<std::size_t> pick(0, rel.size() - 1);
    for (int k = 0; k < 3; ++k)
      ideal_elem += rel.relations()[pick(rng)].poly * testing::random_u(rng, n, 3, 2);
    CHECK(pi(ideal_elem).is_zero());
    CHECK(normal_form(ideal_elem, rel).is_zero());

    // pi(P) = 0 iff normal_form(P) = 0: a nonzero normal combination has nonzero pi
    if (!nf.is_zero()) CHECK_FALSE(pi(nf).is_zero());
  }
}

TEST_CASE("buchberger_verify") {
  CHECK(buchberger_verify(RelationSet::standard(3)));
  CHECK(buchberger_verify(RelationSet::standard(4)));
  CHECK(buchberger_verify(RelationSet::standard(1)));
  CHECK(buchberger_verify(RelationSet::standard(2)));

  const RelationSet full = RelationSet::standard(4);
  REQUIRE(full.relations()[0].name() == "s(1,2,3)");
  const BuchbergerReport report = buchberger_check(full.without(0));
  CHECK_FALSE(report.groebner);
  CHECK(report.reduced);
  CHECK(report.failure.has_value());

  // A set with a relation whose monomial is divisible by another lead.
  RelationSet extra = RelationSet::standard(3);
  Relation dup = make_s(3, 1, 2, 3);
  dup.poly = dup.poly * UMonomial::x(3, 1);
  dup.lead = lead_dill(dup.poly);
  dup.lead_coefficient = dup.poly.coefficient(dup.lead);
  extra.add(dup);
  CHECK_FALSE(buchberger_check(extra).reduced);

  // Pair cap
  const BuchbergerReport capped = buchberger_check(full, 1);
  CHECK(capped.truncated);
  CHECK(capped.pairs_reduced == 1);
}

TEST_CASE("admissibility") {
  // (x2 u13, x1 u23, u12): x2u13 > x1u23 is preserved after multiplying by u12
  const UMonomial u = M("x(2)*u(1,3)", 3), v = M("x(1)*u(2,3)", 3), w = M("u(1,2)", 3);
  CHECK(dill_compare(u, v) > 0);
  CHECK(dill_compare(u * w, v * w) > 0);
  CHECK(dill_compare(u * w, u * w) == 0);

  // n = 2 exhaustive up to degree 4
  std::vector<UMonomial> all;
  for (unsigned d = 0; d <= 4; ++d) {
    auto part = all_monomials_of_degree(2, d);
    all.insert(all.end(), part.begin(), part.end());
  }
  CHECK(all.size() == 35);  // multisets of size <= 4 over 3 variables
  std::size_t violations = 0;
  for (const auto& a : all)
    for (const auto& b : all)
      for (const auto& c : all)
        if (dill_compare(a, b) != dill_compare(a * c, b * c)) ++violations;
  CHECK(violations == 0);

  CHECK(admissibility_probe(4, 2000).ok);
}

TEST_CASE("u-variable normalization") {
  CHECK(U("u(2,1)", 2) == -U("u(1,2)", 2));
  CHECK_THROWS_AS(UPolynomial::u(3, 2, 2), InvalidArgument);
}
