// Acceptance suite: one PASS/FAIL line per criterion, each with a time budget.

#include "random_poly.hpp"
#include "weitz/basis.hpp"
#include "weitz/constants_kernel.hpp"
#include "weitz/format.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace weitz;

namespace {

struct Check {
  bool ok = true;
  std::string note;

  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double budget_s, const std::function<void(Check&)>& body) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.fail(std::string("exception: ") + e.what());
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (c.ok && s > budget_s) {
    std::ostringstream os;
    os << "over budget of " << budget_s << " s";
    c.fail(os.str());
  }
  std::cout << (c.ok ? "[PASS] " : "[FAIL] ") << "criterion " << id << ": " << title << " ("
            << std::fixed << std::setprecision(3) << s << " s)";
  if (!c.ok) std::cout << " -- " << c.note;
  std::cout << std::endl;
  if (!c.ok) ++failures;
}

void c1_relations_vanish(Check& c) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const RelationSet rel = RelationSet::standard(n);
    for (const auto& r : rel.relations())
      if (!pi(r.poly).is_zero()) c.fail("pi(" + r.name() + ") != 0");
  }
}

void c2_leads_and_reducedness(Check& c) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const RelationSet rel = RelationSet::standard(n);
    for (const auto& r : rel.relations()) {
      const auto& [i, j, k, l] = r.idx;
      const UMonomial expected = r.kind == RelationKind::S
                                     ? UMonomial::x(n, j) * UMonomial::u(n, i, k)
                                     : UMonomial::u(n, i, k) * UMonomial::u(n, j, l);
      if (r.lead != expected || lead_dill(r.poly) != expected) c.fail("lead of " + r.name());
      if (r.lead_coefficient != 1 && r.lead_coefficient != -1) c.fail("lead coefficient of " + r.name());
      // reduced: no monomial of any relation is divisible by another relation's lead,
      // and no non-lead monomial is divisible by any lead
      for (const auto& [m, coef] : r.poly.terms())
        for (const auto& other : rel.relations()) {
          if (&other == &r && m == r.lead) continue;
          if (other.lead.divides(m)) c.fail(other.name() + " lead divides a term of " + r.name());
        }
    }
  }
}

void c3_buchberger(Check& c) {
  for (std::size_t n = 3; n <= 5; ++n)
    if (!buchberger_verify(RelationSet::standard(n))) c.fail("not a Groebner basis at n=" + std::to_string(n));
  const RelationSet four = RelationSet::standard(4);
  for (std::size_t pos = 0; pos < four.size(); ++pos)
    if (buchberger_verify(four.without(pos)))
      c.fail("still a Groebner basis without " + four.relations()[pos].name());
}

void c4_dimensions(Check& c) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (unsigned d1 = 0; d1 <= 8; ++d1)
      for (unsigned d2 = 0; d1 + d2 <= 8; ++d2) {
        const std::size_t g = graded_dimension(n, d1, d2);
        const std::size_t o = oracle_kernel(n, d1, d2, false).dimension;
        std::ostringstream at;
        at << " at n=" << n << " (" << d1 << "," << d2 << ")";
        if (g != o) c.fail("graded " + std::to_string(g) + " != oracle " + std::to_string(o) + at.str());
        if (n == 1 && g != (d2 == 0 ? 1u : 0u)) c.fail("n=1 anchor" + at.str());
        if (d1 < d2 && g != 0) c.fail("d1<d2 anchor" + at.str());
      }
}

void c5_decompose_roundtrip(Check& c) {
  std::mt19937_64 rng(20261018);
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const UPolynomial p = testing::random_u(rng, n, 8, 6);
    const XYPolynomial f = pi(p);
    const UPolynomial q = decompose(f).result;
    if (pi(q) != f) c.fail("pi(decompose(pi(P))) != pi(P) for P = " + to_string(p));
    if (normal_form(q) != normal_form(p)) c.fail("normal forms differ for P = " + to_string(p));
  }
}

void c6_step3_bijection(Check& c) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (unsigned w = 0; w <= 6; ++w) {
      const auto normal = enumerate_normal(n, w);
      std::set<XYMonomial> leads;
      for (const auto& v : normal) {
        const XYMonomial m = lead_of(v);
        if (m != lead_xy(pi(v))) c.fail("lead_of disagrees with lex lead of pi for " + to_string(v));
        if (!leads.insert(m).second) c.fail("duplicate lead " + to_string(m));
        if (reconstruct_from_lead(m) != v) c.fail("reconstruct(lead(v)) != v for " + to_string(v));
      }
      // every XY monomial of this weight either is such a lead or is rejected
      std::size_t accepted = 0;
      for (unsigned d2 = 0; d2 <= w; ++d2)
        for (const auto& m : monomials_of_bidegree(n, w - d2, d2)) {
          try {
            const UMonomial v = reconstruct_from_lead(m);
            ++accepted;
            if (!leads.count(m) || lead_of(v) != m) c.fail("reconstruct accepted a non-lead " + to_string(m));
          } catch (const NotALeadingMonomial&) {
            if (leads.count(m)) c.fail("reconstruct rejected the lead " + to_string(m));
          }
        }
      if (accepted != normal.size()) c.fail("lead count mismatch at n=" + std::to_string(n));
    }
}

void c7_witness(Check& c) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + trial % 4;
    std::vector<Rational> alpha(n - 1);
    bool nonzero = false;
    while (!nonzero)
      for (auto& a : alpha) {
        a = coef(rng);
        nonzero |= a != 0;
      }
    const XYPolynomial g = testing::random_xy(rng, n, 3, 5);
    const XYPolynomial w = w_alpha(n, alpha);
    const XYPolynomial f = w * g;
    if (!phi_alpha(f, alpha).is_zero()) c.fail("phi_alpha(w*g) != 0 for g = " + to_string(g));
    if (divide_exact(f, w) != g) c.fail("divide_exact(w*g, w) != g for g = " + to_string(g));
  }
}

void order_axioms(Check& c, const std::vector<UMonomial>& a, const std::vector<UMonomial>& b,
                  const std::vector<UMonomial>& m) {
  for (std::size_t t = 0; t < a.size(); ++t) {
    const auto ab = dill_compare(a[t], b[t]);
    const auto ba = dill_compare(b[t], a[t]);
    if ((ab == 0) != (a[t] == b[t])) c.fail("equal iff identical fails: " + to_string(a[t]) + " vs " + to_string(b[t]));
    if ((ab < 0) != (ba > 0) || (ab == 0) != (ba == 0)) c.fail("antisymmetry fails: " + to_string(a[t]) + " vs " + to_string(b[t]));
    if (dill_compare(a[t] * m[t], b[t] * m[t]) != ab) c.fail("not multiplicative: " + to_string(m[t]));
    if (ab > 0 && dill_compare(b[t], m[t]) > 0 && dill_compare(a[t], m[t]) <= 0)
      c.fail("transitivity fails");
  }
}

void c8_dill_order(Check& c) {
  std::vector<UMonomial> all;
  for (unsigned d = 0; d <= 3; ++d)
    for (const auto& m : all_monomials_of_degree(3, d)) all.push_back(m);
  // exhaustive pairs for equality/antisymmetry, triples for transitivity and multiplicativity
  for (const auto& a : all)
    for (const auto& b : all) {
      std::vector<UMonomial> va(all.size(), a), vb(all.size(), b);
      order_axioms(c, va, vb, all);
      if (!c.ok) return;
    }

  std::mt19937_64 rng(8);
  std::vector<UMonomial> a, b, m;
  for (int t = 0; t < 10000; ++t) {
    std::uniform_int_distribution<unsigned> w(0, 8);
    a.push_back(testing::random_u_monomial_of_weight(rng, 5, w(rng)));
    b.push_back(testing::random_u_monomial_of_weight(rng, 5, w(rng)));
    m.push_back(testing::random_u_monomial_of_weight(rng, 5, w(rng)));
  }
  order_axioms(c, a, b, m);
}

void c9_golden(Check& c) {
  const std::string cmd = std::string("\"") + WEITZ_GOLDEN_RUNNER + "\" \"" + WEITZ_CLI + "\" \"" +
                          WEITZ_GOLDEN_DIR + "\" > /dev/null";
  if (std::system(cmd.c_str()) != 0) c.fail("golden runner reported differences (run ctest -R golden)");
}

} // namespace

int main() {
  criterion(1, "pi(s) = pi(r) = 0 for n <= 6", 1.0, c1_relations_vanish);
  criterion(2, "leads are x_j u_ik and u_ik u_jl, basis is reduced, n <= 6", 1.0, c2_leads_and_reducedness);
  criterion(3, "Groebner basis for n in {3,4,5}, fails with any relation dropped at n = 4", 60.0, c3_buchberger);
  criterion(4, "graded dimension equals kernel oracle, n <= 5, d1 + d2 <= 8", 300.0, c4_dimensions);
  criterion(5, "decomposition round trip on 600 random polynomials", 120.0, c5_decompose_roundtrip);
  criterion(6, "bijection between normal monomials and leads, n <= 4, weight <= 6", 10.0,
            c6_step3_bijection);
  criterion(7, "phi_alpha(w_alpha g) = 0 and exact division on 150 random cases", 10.0, c7_witness);
  criterion(8, "DILL is a multiplicative strict total order", 10.0, c8_dill_order);
  criterion(9, "CLI golden outputs match and are reproducible", 60.0, c9_golden);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
