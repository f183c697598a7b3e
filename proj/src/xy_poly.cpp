#include "weitz/xy_poly.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace weitz {

namespace {

void require_same_n(std::size_t a, std::size_t b) {
  if (a != b)
    throw DimensionMismatch("variable counts differ: " + std::to_string(a) + " vs " +
                            std::to_string(b));
}

void require_index(std::size_t n, std::size_t i) {
  if (i < 1 || i > n)
    throw InvalidArgument("index " + std::to_string(i) + " out of range [1," +
                          std::to_string(n) + "]");
}

} // namespace

// ---------------------------------------------------------------- XYMonomial

XYMonomial::XYMonomial(std::span<const Exponent> a, std::span<const Exponent> b)
    : n_(a.size()), e_(2 * a.size()) {
  if (a.size() != b.size())
    throw DimensionMismatch("x and y exponent lists differ in length");
  for (std::size_t i = 0; i < n_; ++i) {
    e_[2 * i] = a[i];
    e_[2 * i + 1] = b[i];
  }
}

XYMonomial XYMonomial::x(std::size_t n, std::size_t i, Exponent e) {
  require_index(n, i);
  XYMonomial m(n);
  m.set_x(i, e);
  return m;
}

XYMonomial XYMonomial::y(std::size_t n, std::size_t i, Exponent e) {
  require_index(n, i);
  XYMonomial m(n);
  m.set_y(i, e);
  return m;
}

std::vector<Exponent> XYMonomial::x_exponents() const {
  std::vector<Exponent> a(n_);
  for (std::size_t i = 0; i < n_; ++i) a[i] = e_[2 * i];
  return a;
}

std::vector<Exponent> XYMonomial::y_exponents() const {
  std::vector<Exponent> b(n_);
  for (std::size_t i = 0; i < n_; ++i) b[i] = e_[2 * i + 1];
  return b;
}

unsigned XYMonomial::deg_x() const {
  unsigned d = 0;
  for (std::size_t i = 0; i < n_; ++i) d += e_[2 * i];
  return d;
}

unsigned XYMonomial::deg_y() const {
  unsigned d = 0;
  for (std::size_t i = 0; i < n_; ++i) d += e_[2 * i + 1];
  return d;
}

bool XYMonomial::is_one() const {
  return std::all_of(e_.begin(), e_.end(), [](Exponent e) { return e == 0; });
}

bool XYMonomial::divides(const XYMonomial& other) const {
  require_same_n(n_, other.n_);
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

XYMonomial XYMonomial::quotient_of(const XYMonomial& other) const {
  XYMonomial q = other;
  for (std::size_t i = 0; i < e_.size(); ++i) q.e_[i] -= e_[i];
  return q;
}

XYMonomial& XYMonomial::operator*=(const XYMonomial& other) {
  require_same_n(n_, other.n_);
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += other.e_[i];
  return *this;
}

// -------------------------------------------------------------- XYPolynomial

XYPolynomial::XYPolynomial(const XYMonomial& m, const Rational& c) : n_(m.n()) {
  if (c != 0) {
    Rational v = c;
    v.canonicalize();
    terms_.emplace(m, std::move(v));
  }
}

XYPolynomial XYPolynomial::constant(std::size_t n, const Rational& c) {
  return XYPolynomial(XYMonomial::one(n), c);
}

Rational XYPolynomial::coefficient(const XYMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void XYPolynomial::add_term(const XYMonomial& m, const Rational& c) {
  if (c == 0) return;
  require_same_n(n_, m.n());
  Rational v = c;
  v.canonicalize();
  auto [it, inserted] = terms_.try_emplace(m, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) terms_.erase(it);
  }
}

XYPolynomial& XYPolynomial::operator+=(const XYPolynomial& g) {
  require_same_n(n_, g.n_);
  for (const auto& [m, c] : g.terms_) add_term(m, c);
  return *this;
}

XYPolynomial& XYPolynomial::operator-=(const XYPolynomial& g) {
  require_same_n(n_, g.n_);
  for (const auto& [m, c] : g.terms_) add_term(m, -c);
  return *this;
}

XYPolynomial& XYPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  Rational v = c;
  v.canonicalize();
  for (auto& [m, coef] : terms_) coef *= v;
  return *this;
}

XYPolynomial XYPolynomial::operator-() const {
  XYPolynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

XYPolynomial operator*(const XYPolynomial& f, const XYPolynomial& g) {
  require_same_n(f.n_, g.n_);
  XYPolynomial r(f.n_);
  for (const auto& [mf, cf] : f.terms_)
    for (const auto& [mg, cg] : g.terms_) r.add_term(mf * mg, cf * cg);
  return r;
}

XYPolynomial operator*(const XYPolynomial& f, const XYMonomial& m) {
  require_same_n(f.n_, m.n());
  XYPolynomial r(f.n_);
  // Multiplying by a monomial preserves the order, so hinted insertion works.
  for (const auto& [mf, cf] : f.terms_) r.terms_.emplace_hint(r.terms_.end(), mf * m, cf);
  return r;
}

unsigned XYPolynomial::total_degree() const {
  if (is_zero()) throw ZeroPolynomial("the zero polynomial has no degree");
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

unsigned XYPolynomial::deg_x() const {
  if (is_zero()) throw ZeroPolynomial("the zero polynomial has no degree");
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.deg_x());
  return d;
}

unsigned XYPolynomial::deg_y() const {
  if (is_zero()) throw ZeroPolynomial("the zero polynomial has no degree");
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.deg_y());
  return d;
}

XYPolynomial pow(const XYPolynomial& f, unsigned e) {
  XYPolynomial result = XYPolynomial::constant(f.n(), 1);
  XYPolynomial base = f;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

// ---------------------------------------------------------------- operations

XYPolynomial delta(const XYPolynomial& f) {
  const std::size_t n = f.n();
  XYPolynomial r(n);
  for (const auto& [m, c] : f.terms()) {
    for (std::size_t i = 1; i <= n; ++i) {
      const Exponent b = m.y_exp(i);
      if (b == 0) continue;
      XYMonomial t = m;
      t.set_y(i, b - 1);
      t.set_x(i, m.x_exp(i) + 1);
      r.add_term(t, c * b);
    }
  }
  return r;
}

bool is_constant(const XYPolynomial& f) { return delta(f).is_zero(); }

std::map<std::pair<unsigned, unsigned>, XYPolynomial> bidegree_split(const XYPolynomial& f) {
  std::map<std::pair<unsigned, unsigned>, XYPolynomial> parts;
  for (const auto& [m, c] : f.terms()) {
    auto [it, _] = parts.try_emplace({m.deg_x(), m.deg_y()}, f.n());
    it->second.add_term(m, c);
  }
  return parts;
}

std::map<unsigned, XYPolynomial> xnyn_split(const XYPolynomial& f) {
  return xnyn_split(f, f.n());
}

std::map<unsigned, XYPolynomial> xnyn_split(const XYPolynomial& f, std::size_t k) {
  require_index(f.n(), k);
  std::map<unsigned, XYPolynomial> parts;
  for (const auto& [m, c] : f.terms()) {
    auto [it, _] = parts.try_emplace(m.x_exp(k) + m.y_exp(k), f.n());
    it->second.add_term(m, c);
  }
  return parts;
}

XYMonomial lead_xy(const XYPolynomial& f) {
  if (f.is_zero()) throw ZeroPolynomial("leading monomial of the zero polynomial");
  return f.terms().begin()->first;
}

std::optional<XYPolynomial> try_divide_exact(const XYPolynomial& f, const XYPolynomial& g) {
  require_same_n(f.n(), g.n());
  if (g.is_zero()) throw DivisionByZero("division by the zero polynomial");
  const auto& [glead, gcoef] = *g.terms().begin();
  XYPolynomial rem = f;
  XYPolynomial quot(f.n());
  while (!rem.is_zero()) {
    const auto& [rlead, rcoef] = *rem.terms().begin();
    if (!glead.divides(rlead)) return std::nullopt;
    const XYMonomial qm = glead.quotient_of(rlead);
    const Rational qc = rcoef / gcoef;
    quot.add_term(qm, qc);
    rem -= g * qm * qc;
  }
  return quot;
}

XYPolynomial divide_exact(const XYPolynomial& f, const XYPolynomial& g) {
  auto q = try_divide_exact(f, g);
  if (!q) throw NotDivisible("divisor does not divide the dividend exactly");
  return std::move(*q);
}

Exponent max_x_power(const XYPolynomial& f, std::size_t k) {
  if (f.is_zero()) throw ZeroPolynomial("x-power of the zero polynomial");
  Exponent q = f.terms().begin()->first.x_exp(k);
  for (const auto& [m, c] : f.terms()) q = std::min(q, m.x_exp(k));
  return q;
}

XYPolynomial change_arity(const XYPolynomial& f, std::size_t m) {
  XYPolynomial r(m);
  for (const auto& [mono, c] : f.terms()) {
    XYMonomial t(m);
    for (std::size_t i = 1; i <= f.n(); ++i) {
      if (i > m) {
        if (mono.x_exp(i) || mono.y_exp(i))
          throw InvalidArgument("cannot drop variable index " + std::to_string(i) +
                                " which occurs in the polynomial");
        continue;
      }
      t.set_x(i, mono.x_exp(i));
      t.set_y(i, mono.y_exp(i));
    }
    r.add_term(t, c);
  }
  return r;
}

// ------------------------------------------------------- symbolic substitution

void SubstitutionResult::add(const TExponent& t, const XYPolynomial& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

XYPolynomial SubstitutionResult::evaluate(std::span<const Rational> alpha) const {
  if (alpha.size() != params_)
    throw DimensionMismatch("alpha has " + std::to_string(alpha.size()) +
                            " entries, expected " + std::to_string(params_));
  XYPolynomial r(n_);
  for (const auto& [t, c] : coeffs_) {
    Rational scale = 1;
    for (std::size_t i = 0; i < params_; ++i)
      for (Exponent e = 0; e < t[i]; ++e) scale *= alpha[i];
    if (scale != 0) r += c * scale;
  }
  return r;
}

namespace {

using TPoly = std::map<SubstitutionResult::TExponent, XYPolynomial>;

void tpoly_add(TPoly& p, const SubstitutionResult::TExponent& t, const XYPolynomial& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = p.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

TPoly tpoly_mul(const TPoly& a, const TPoly& b) {
  TPoly r;
  for (const auto& [ta, ca] : a)
    for (const auto& [tb, cb] : b) {
      SubstitutionResult::TExponent t = ta;
      for (std::size_t i = 0; i < t.size(); ++i) t[i] += tb[i];
      tpoly_add(r, t, ca * cb);
    }
  return r;
}

// Powers 0..max_e of the linear form sum_i t_i z_i, z = x or y.
std::vector<TPoly> linear_form_powers(std::size_t n, bool use_y, Exponent max_e) {
  const std::size_t params = n - 1;
  TPoly one;
  one.emplace(SubstitutionResult::TExponent(params, 0), XYPolynomial::constant(n, 1));
  TPoly form;
  for (std::size_t i = 1; i <= params; ++i) {
    SubstitutionResult::TExponent t(params, 0);
    t[i - 1] = 1;
    form.emplace(t, use_y ? XYPolynomial::y(n, i) : XYPolynomial::x(n, i));
  }
  std::vector<TPoly> powers{one};
  for (Exponent e = 1; e <= max_e; ++e) powers.push_back(tpoly_mul(powers.back(), form));
  return powers;
}

} // namespace

SubstitutionResult phi_symbolic(const XYPolynomial& f) {
  const std::size_t n = f.n();
  if (n < 2) throw InvalidArity("phi needs n >= 2, got n = " + std::to_string(n));

  Exponent max_a = 0, max_b = 0;
  for (const auto& [m, c] : f.terms()) {
    max_a = std::max(max_a, m.x_exp(n));
    max_b = std::max(max_b, m.y_exp(n));
  }
  const auto xpow = linear_form_powers(n, false, max_a);
  const auto ypow = linear_form_powers(n, true, max_b);

  // Group terms by their (x_n, y_n) exponents so each image power product is
  // formed once.
  std::map<std::pair<Exponent, Exponent>, XYPolynomial> groups;
  for (const auto& [m, c] : f.terms()) {
    XYMonomial rest = m;
    rest.set_x(n, 0);
    rest.set_y(n, 0);
    auto [it, _] = groups.try_emplace({m.x_exp(n), m.y_exp(n)}, n);
    it->second.add_term(rest, c);
  }

  SubstitutionResult result(n, n - 1);
  for (const auto& [ab, rest] : groups) {
    const TPoly image = tpoly_mul(xpow[ab.first], ypow[ab.second]);
    for (const auto& [t, c] : image) result.add(t, c * rest);
  }
  return result;
}

SubstitutionResult delta(const SubstitutionResult& s) {
  SubstitutionResult r(s.n(), s.params());
  for (const auto& [t, c] : s.coefficients()) r.add(t, delta(c));
  return r;
}

XYPolynomial phi_alpha(const XYPolynomial& f, std::span<const Rational> alpha) {
  const std::size_t n = f.n();
  if (n < 2) throw InvalidArity("phi needs n >= 2, got n = " + std::to_string(n));
  if (alpha.size() != n - 1)
    throw DimensionMismatch("alpha must have n-1 entries");
  XYPolynomial lx(n), ly(n);
  for (std::size_t i = 1; i < n; ++i) {
    lx.add_term(XYMonomial::x(n, i), alpha[i - 1]);
    ly.add_term(XYMonomial::y(n, i), alpha[i - 1]);
  }
  XYPolynomial r(n);
  for (const auto& [m, c] : f.terms()) {
    XYMonomial rest = m;
    rest.set_x(n, 0);
    rest.set_y(n, 0);
    r += pow(lx, m.x_exp(n)) * pow(ly, m.y_exp(n)) * rest * c;
  }
  return r;
}

XYPolynomial w_alpha(std::size_t n, std::span<const Rational> alpha) {
  if (n < 2) throw InvalidArity("w_alpha needs n >= 2");
  if (alpha.size() != n - 1) throw DimensionMismatch("alpha must have n-1 entries");
  XYPolynomial lx(n), ly(n);
  for (std::size_t i = 1; i < n; ++i) {
    lx.add_term(XYMonomial::x(n, i), alpha[i - 1]);
    ly.add_term(XYMonomial::y(n, i), alpha[i - 1]);
  }
  return lx * XYPolynomial::y(n, n) - ly * XYPolynomial::x(n, n);
}

} // namespace weitz
