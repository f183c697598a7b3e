#include "weitz/constants_kernel.hpp"

#include <stdexcept>

namespace weitz {

const char* to_string(StepKind kind) {
  switch (kind) {
    case StepKind::SplitComponents: return "split-components";
    case StepKind::BaseCase: return "base-case";
    case StepKind::DropVariable: return "recursion-on-n";
    case StepKind::StripXnPower: return "strip-xn-power";
    case StepKind::DivideU12: return "u12-division";
    case StepKind::RewriteUsn: return "usn-rewrite";
  }
  return "?";
}

namespace {

class Decomposer {
public:
  explicit Decomposer(std::vector<TraceStep>* trace) : trace_(trace) {}

  // f is a constant over exactly f.n() index pairs; the result lives in
  // K[X,U] over the same indices.
  UPolynomial run(const XYPolynomial& f) {
    const std::size_t n = f.n();
    if (f.is_zero()) return UPolynomial(n);

    // Delta preserves both gradings, so every component is itself constant.
    const auto bideg = bidegree_split(f);
    if (bideg.size() > 1 || xnyn_split(f).size() > 1) {
      note(StepKind::SplitComponents, n, 0, std::to_string(bideg.size()) + " bidegrees");
      UPolynomial sum(n);
      for (const auto& [bd, part] : bideg)
        for (const auto& [p, comp] : xnyn_split(part)) sum += run_homogeneous(comp);
      return sum;
    }
    return run_homogeneous(f);
  }

private:
  void note(StepKind kind, std::size_t n, unsigned deg, std::string detail = {}) {
    if (trace_) trace_->push_back(TraceStep{kind, n, deg, std::move(detail)});
  }

  // f != 0 is bihomogeneous and homogeneous in (x_n, y_n).
  UPolynomial run_homogeneous(const XYPolynomial& f) {
    const std::size_t n = f.n();
    const XYMonomial& lead = f.terms().begin()->first;

    if (n == 1) {
      if (f.deg_y() != 0) throw std::logic_error("constant in K[x1,y1] involves y1");
      note(StepKind::BaseCase, 1, lead.degree());
      UPolynomial r(1);
      for (const auto& [m, c] : f.terms()) r.add_term(UMonomial::x(1, 1, m.x_exp(1)), c);
      return r;
    }

    const unsigned total = lead.x_exp(n) + lead.y_exp(n);
    if (total == 0) {
      note(StepKind::DropVariable, n, 0);
      return change_arity(run(change_arity(f, n - 1)), n);
    }

    const Exponent q = max_x_power(f, n);
    if (q > 0) {
      note(StepKind::StripXnPower, n, total, "q=" + std::to_string(q));
      const XYPolynomial xq(XYMonomial::x(n, n, q));
      return run(divide_exact(f, xq)) * UMonomial::x(n, n, q);
    }

    const unsigned p = total;  // q = 0, so the y_n-degree of the lead part is p
    if (phi_symbolic(f).is_zero()) {
      if (n > 2) throw std::logic_error("nonzero constant annihilated by phi for n > 2");
      note(StepKind::DivideU12, 2, p);
      const XYPolynomial u12 = pi(UPolynomial::u(2, 1, 2));
      return run(divide_exact(f, u12)) * UMonomial::u(2, 1, 2);
    }

    if (f.deg_x() < f.deg_y())
      throw std::logic_error("bihomogeneous constant with deg_X < deg_Y");

    note(StepKind::RewriteUsn, n, p, "p=" + std::to_string(p));

    // a_p: coefficient of y_n^p, a constant over n - 1 index pairs.
    XYPolynomial ap(n);
    for (const auto& [m, c] : f.terms()) {
      if (m.y_exp(n) != p) continue;
      XYMonomial rest = m;
      rest.set_y(n, 0);
      ap.add_term(rest, c);
    }
    const UPolynomial ap_dec = change_arity(run(change_arity(ap, n - 1)), n);

    // Each monomial of a_p's decomposition carries at least p x-factors;
    // pull the p with smallest indices and pair each with y_n.
    UPolynomial head(n);
    for (const auto& [m, c] : ap_dec.terms()) {
      const auto xs = m.x_factors();
      if (xs.size() < p) throw std::logic_error("a_p monomial with fewer than p x-factors");
      std::vector<Exponent> x(m.x_exponents().begin(), m.x_exponents().end());
      std::vector<Exponent> u(m.u_exponents().begin(), m.u_exponents().end());
      for (unsigned t = 0; t < p; ++t) {
        const std::size_t s = xs[t];
        --x[s - 1];
        ++u[pair_index(n, s, n)];
      }
      head.add_term(UMonomial(n, std::move(x), std::move(u)), c);
    }

    const XYPolynomial rest = f - pi(head);
    const XYPolynomial f1 = divide_exact(rest, XYPolynomial::x(n, n));
    return head + run(f1) * UMonomial::x(n, n);
  }

  std::vector<TraceStep>* trace_;
};

} // namespace

Decomposition decompose(const XYPolynomial& f, const DecomposeOptions& options) {
  if (!is_constant(f)) throw NotAConstant("Delta(f) != 0");
  Decomposition d{f, UPolynomial(f.n()), {}};
  Decomposer dec(options.trace ? &d.trace : nullptr);
  d.result = dec.run(f);
  return d;
}

MembershipCertificate membership_certificate(const XYPolynomial& f,
                                             const DecomposeOptions& options) {
  if (!is_constant(f)) return {};
  return {true, decompose(f, options)};
}

} // namespace weitz
