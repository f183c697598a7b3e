#include "weitz/xu_poly.hpp"

#include <algorithm>
#include <random>
#include <sstream>

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

DILLKey compute_key(std::size_t n, std::span<const Exponent> x, std::span<const Exponent> u) {
  DILLKey key;
  for (std::size_t i = 0; i < n; ++i) {
    key.c += x[i];
    for (Exponent e = 0; e < x[i]; ++e) key.omega.push_back(static_cast<std::uint32_t>(i + 1));
  }
  std::vector<std::uint32_t> ks;
  std::size_t pos = 0;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j, ++pos) {
      const Exponent e = u[pos];
      if (e == 0) continue;
      key.d += e;
      key.length += e * static_cast<unsigned>(j - i);
      for (Exponent r = 0; r < e; ++r) {
        key.omega.push_back(static_cast<std::uint32_t>(i));
        ks.push_back(static_cast<std::uint32_t>(j));
      }
    }
  key.omega.insert(key.omega.end(), ks.begin(), ks.end());
  return key;
}

} // namespace

std::pair<std::size_t, std::size_t> pair_at(std::size_t n, std::size_t index) {
  std::size_t i = 1;
  while (index >= n - i) {
    index -= n - i;
    ++i;
  }
  return {i, i + 1 + index};
}

std::strong_ordering dill_compare(const DILLKey& v, const DILLKey& w) {
  if (auto c = v.c <=> w.c; c != 0) return c;
  if (auto c = v.d <=> w.d; c != 0) return c;
  if (auto c = v.length <=> w.length; c != 0) return c;
  // Reversed: the smaller entry at the first difference wins.
  const std::size_t len = std::min(v.omega.size(), w.omega.size());
  for (std::size_t p = 0; p < len; ++p)
    if (v.omega[p] != w.omega[p]) return w.omega[p] <=> v.omega[p];
  return std::strong_ordering::equal;
}

// ----------------------------------------------------------------- UMonomial

UMonomial::UMonomial(std::size_t n) : n_(n), x_(n, 0), u_(pair_count(n), 0) {}

UMonomial::UMonomial(std::size_t n, std::vector<Exponent> x, std::vector<Exponent> u)
    : n_(n), x_(std::move(x)), u_(std::move(u)) {
  if (x_.size() != n || u_.size() != pair_count(n))
    throw DimensionMismatch("exponent vectors do not match n = " + std::to_string(n));
  key_ = compute_key(n_, x_, u_);
}

UMonomial UMonomial::x(std::size_t n, std::size_t i, Exponent e) {
  require_index(n, i);
  std::vector<Exponent> xs(n, 0);
  xs[i - 1] = e;
  return UMonomial(n, std::move(xs), std::vector<Exponent>(pair_count(n), 0));
}

UMonomial UMonomial::u(std::size_t n, std::size_t i, std::size_t j, Exponent e) {
  require_index(n, i);
  require_index(n, j);
  if (i >= j) throw InvalidArgument("u-variable needs i < j");
  std::vector<Exponent> us(pair_count(n), 0);
  us[pair_index(n, i, j)] = e;
  return UMonomial(n, std::vector<Exponent>(n, 0), std::move(us));
}

std::vector<std::size_t> UMonomial::x_factors() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n_; ++i)
    for (Exponent e = 0; e < x_[i]; ++e) out.push_back(i + 1);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> UMonomial::u_factors() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t p = 0; p < u_.size(); ++p)
    for (Exponent e = 0; e < u_[p]; ++e) out.push_back(pair_at(n_, p));
  return out;
}

bool UMonomial::divides(const UMonomial& other) const {
  require_same_n(n_, other.n_);
  for (std::size_t i = 0; i < x_.size(); ++i)
    if (x_[i] > other.x_[i]) return false;
  for (std::size_t p = 0; p < u_.size(); ++p)
    if (u_[p] > other.u_[p]) return false;
  return true;
}

UMonomial UMonomial::quotient_of(const UMonomial& other) const {
  std::vector<Exponent> x = other.x_, u = other.u_;
  for (std::size_t i = 0; i < x.size(); ++i) x[i] -= x_[i];
  for (std::size_t p = 0; p < u.size(); ++p) u[p] -= u_[p];
  return UMonomial(n_, std::move(x), std::move(u));
}

bool UMonomial::coprime(const UMonomial& other) const {
  for (std::size_t i = 0; i < x_.size(); ++i)
    if (x_[i] && other.x_[i]) return false;
  for (std::size_t p = 0; p < u_.size(); ++p)
    if (u_[p] && other.u_[p]) return false;
  return true;
}

UMonomial UMonomial::lcm(const UMonomial& other) const {
  require_same_n(n_, other.n_);
  std::vector<Exponent> x = x_, u = u_;
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::max(x[i], other.x_[i]);
  for (std::size_t p = 0; p < u.size(); ++p) u[p] = std::max(u[p], other.u_[p]);
  return UMonomial(n_, std::move(x), std::move(u));
}

UMonomial operator*(const UMonomial& a, const UMonomial& b) {
  require_same_n(a.n_, b.n_);
  std::vector<Exponent> x = a.x_, u = a.u_;
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += b.x_[i];
  for (std::size_t p = 0; p < u.size(); ++p) u[p] += b.u_[p];
  return UMonomial(a.n_, std::move(x), std::move(u));
}

std::strong_ordering dill_compare(const UMonomial& v, const UMonomial& w) {
  require_same_n(v.n(), w.n());
  return dill_compare(v.key(), w.key());
}

// --------------------------------------------------------------- UPolynomial

UPolynomial::UPolynomial(const UMonomial& m, const Rational& c) : n_(m.n()) {
  if (c != 0) {
    Rational v = c;
    v.canonicalize();
    terms_.emplace(m, std::move(v));
  }
}

UPolynomial UPolynomial::constant(std::size_t n, const Rational& c) {
  return UPolynomial(UMonomial(n, std::vector<Exponent>(n, 0),
                               std::vector<Exponent>(pair_count(n), 0)),
                     c);
}

UPolynomial UPolynomial::u(std::size_t n, std::size_t i, std::size_t j) {
  if (i == j) throw InvalidArgument("u(i,i) is not a variable");
  if (i > j) return UPolynomial(UMonomial::u(n, j, i), -1);
  return UPolynomial(UMonomial::u(n, i, j));
}

Rational UPolynomial::coefficient(const UMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void UPolynomial::add_term(const UMonomial& m, const Rational& c) {
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

UPolynomial& UPolynomial::operator+=(const UPolynomial& g) {
  require_same_n(n_, g.n_);
  for (const auto& [m, c] : g.terms_) add_term(m, c);
  return *this;
}

UPolynomial& UPolynomial::operator-=(const UPolynomial& g) {
  require_same_n(n_, g.n_);
  for (const auto& [m, c] : g.terms_) add_term(m, -c);
  return *this;
}

UPolynomial& UPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  Rational v = c;
  v.canonicalize();
  for (auto& [m, coef] : terms_) coef *= v;
  return *this;
}

UPolynomial UPolynomial::operator-() const {
  UPolynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

UPolynomial operator*(const UPolynomial& f, const UPolynomial& g) {
  require_same_n(f.n_, g.n_);
  UPolynomial r(f.n_);
  for (const auto& [mf, cf] : f.terms_)
    for (const auto& [mg, cg] : g.terms_) r.add_term(mf * mg, cf * cg);
  return r;
}

UPolynomial operator*(const UPolynomial& f, const UMonomial& m) {
  UPolynomial r(f.n_);
  for (const auto& [mf, cf] : f.terms_) r.add_term(mf * m, cf);
  return r;
}

UPolynomial pow(const UPolynomial& f, unsigned e) {
  UPolynomial result = UPolynomial::constant(f.n(), 1);
  for (unsigned k = 0; k < e; ++k) result = result * f;
  return result;
}

UPolynomial change_arity(const UPolynomial& p, std::size_t m) {
  UPolynomial r(m);
  const std::size_t n = p.n();
  for (const auto& [mono, c] : p.terms()) {
    std::vector<Exponent> x(m, 0), u(pair_count(m), 0);
    for (std::size_t i = 1; i <= n; ++i) {
      if (mono.x_exp(i) == 0) continue;
      if (i > m) throw InvalidArgument("cannot drop index " + std::to_string(i));
      x[i - 1] = mono.x_exp(i);
    }
    for (const auto& [i, j] : mono.u_factors()) {
      if (j > m) throw InvalidArgument("cannot drop index " + std::to_string(j));
      ++u[pair_index(m, i, j)];
    }
    r.add_term(UMonomial(m, std::move(x), std::move(u)), c);
  }
  return r;
}

// ------------------------------------------------------------------------ pi

XYPolynomial pi(const UMonomial& m) {
  const std::size_t n = m.n();
  XYMonomial xs(n);
  for (std::size_t i = 1; i <= n; ++i) xs.set_x(i, m.x_exp(i));
  XYPolynomial r(xs);
  std::size_t pos = 0;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j, ++pos) {
      const Exponent e = m.u_exponents()[pos];
      if (e == 0) continue;
      XYPolynomial uij(XYMonomial::x(n, i) * XYMonomial::y(n, j));
      uij.add_term(XYMonomial::x(n, j) * XYMonomial::y(n, i), -1);
      r = r * pow(uij, e);
    }
  return r;
}

XYPolynomial pi(const UPolynomial& p) {
  XYPolynomial r(p.n());
  for (const auto& [m, c] : p.terms()) r += pi(m) * c;
  return r;
}

UMonomial lead_dill(const UPolynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial("leading monomial of the zero polynomial");
  return p.terms().begin()->first;
}

// ----------------------------------------------------------------- relations

std::string Relation::name() const {
  std::ostringstream os;
  if (kind == RelationKind::S)
    os << "s(" << idx[0] << "," << idx[1] << "," << idx[2] << ")";
  else
    os << "r(" << idx[0] << "," << idx[1] << "," << idx[2] << "," << idx[3] << ")";
  return os.str();
}

namespace {

Relation finish(RelationKind kind, std::array<std::size_t, 4> idx, UPolynomial poly) {
  UMonomial lead = lead_dill(poly);
  Rational lc = poly.coefficient(lead);
  return Relation{kind, idx, std::move(poly), std::move(lead), std::move(lc)};
}

} // namespace

Relation make_s(std::size_t n, std::size_t i, std::size_t j, std::size_t k) {
  if (!(1 <= i && i < j && j < k && k <= n))
    throw InvalidArgument("s(i,j,k) needs 1 <= i < j < k <= n");
  UPolynomial p = UPolynomial::x(n, i) * UPolynomial::u(n, j, k) -
                  UPolynomial::x(n, j) * UPolynomial::u(n, i, k) +
                  UPolynomial::x(n, k) * UPolynomial::u(n, i, j);
  return finish(RelationKind::S, {i, j, k, 0}, std::move(p));
}

Relation make_r(std::size_t n, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  if (!(1 <= i && i < j && j < k && k < l && l <= n))
    throw InvalidArgument("r(i,j,k,l) needs 1 <= i < j < k < l <= n");
  UPolynomial p = UPolynomial::u(n, i, j) * UPolynomial::u(n, k, l) -
                  UPolynomial::u(n, i, k) * UPolynomial::u(n, j, l) +
                  UPolynomial::u(n, i, l) * UPolynomial::u(n, j, k);
  return finish(RelationKind::R, {i, j, k, l}, std::move(p));
}

RelationSet RelationSet::standard(std::size_t n) {
  RelationSet set(n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      for (std::size_t k = j + 1; k <= n; ++k) set.add(make_s(n, i, j, k));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      for (std::size_t k = j + 1; k <= n; ++k)
        for (std::size_t l = k + 1; l <= n; ++l) set.add(make_r(n, i, j, k, l));
  return set;
}

std::size_t RelationSet::count(RelationKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(rels_.begin(), rels_.end(), [&](const Relation& r) { return r.kind == kind; }));
}

void RelationSet::add(Relation r) {
  require_same_n(n_, r.poly.n());
  rels_.push_back(std::move(r));
}

RelationSet RelationSet::without(std::size_t pos) const {
  if (pos >= rels_.size()) throw InvalidArgument("relation position out of range");
  RelationSet out(n_);
  for (std::size_t p = 0; p < rels_.size(); ++p)
    if (p != pos) out.rels_.push_back(rels_[p]);
  return out;
}

const Relation* RelationSet::first_reducer(const UMonomial& m) const {
  for (const auto& r : rels_)
    if (r.lead.divides(m)) return &r;
  return nullptr;
}

const Relation* RelationSet::last_reducer(const UMonomial& m) const {
  for (auto it = rels_.rbegin(); it != rels_.rend(); ++it)
    if (it->lead.divides(m)) return &*it;
  return nullptr;
}

// ---------------------------------------------------------------- reduction

UPolynomial normal_form(const UPolynomial& p, const RelationSet& rel, ReductionStrategy strategy) {
  require_same_n(p.n(), rel.n());
  UPolynomial work = p;
  UPolynomial done(p.n());

  if (strategy == ReductionStrategy::LargestFirst) {
    // Terms leave `work` in DILL-descending order; a reduction only creates
    // smaller terms, so anything moved to `done` is final.
    while (!work.is_zero()) {
      const auto it = work.terms().begin();
      const UMonomial m = it->first;
      const Rational c = it->second;
      const Relation* r = rel.first_reducer(m);
      if (!r) {
        done.add_term(m, c);
        work.add_term(m, -c);
        continue;
      }
      work -= r->poly * r->lead.quotient_of(m) * (c / r->lead_coefficient);
    }
    return done;
  }

  for (;;) {
    const Relation* r = nullptr;
    const UMonomial* target = nullptr;
    Rational c;
    for (auto it = work.terms().rbegin(); it != work.terms().rend(); ++it) {
      if ((r = rel.last_reducer(it->first))) {
        target = &it->first;
        c = it->second;
        break;
      }
    }
    if (!r) return work;
    const UMonomial m = *target;
    work -= r->poly * r->lead.quotient_of(m) * (c / r->lead_coefficient);
  }
}

UPolynomial normal_form(const UPolynomial& p) {
  return normal_form(p, RelationSet::standard(p.n()));
}

BuchbergerReport buchberger_check(const RelationSet& rel, std::size_t max_pairs) {
  BuchbergerReport report;
  const auto& g = rel.relations();

  // Reducedness: no monomial of a relation is divisible by another's lead.
  for (std::size_t a = 0; a < g.size() && report.reduced; ++a)
    for (const auto& [m, c] : g[a].poly.terms()) {
      for (std::size_t b = 0; b < g.size(); ++b) {
        if (a == b || !g[b].lead.divides(m)) continue;
        report.reduced = false;
        report.failure = "not reduced: a monomial of " + g[a].name() +
                         " is divisible by the lead of " + g[b].name();
        break;
      }
      if (!report.reduced) break;
    }

  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = a + 1; b < g.size(); ++b) {
      ++report.pairs_total;
      if (g[a].lead.coprime(g[b].lead)) {
        ++report.pairs_skipped_coprime;
        continue;
      }
      if (max_pairs != 0 && report.pairs_reduced >= max_pairs) {
        report.truncated = true;
        continue;
      }
      ++report.pairs_reduced;
      const UMonomial l = g[a].lead.lcm(g[b].lead);
      UPolynomial spoly = g[a].poly * g[a].lead.quotient_of(l) * (1 / g[a].lead_coefficient) -
                          g[b].poly * g[b].lead.quotient_of(l) * (1 / g[b].lead_coefficient);
      if (!normal_form(spoly, rel).is_zero() && report.groebner) {
        report.groebner = false;
        if (report.reduced)
          report.failure = "S-polynomial of " + g[a].name() + " and " + g[b].name() +
                           " does not reduce to zero";
      }
    }
  return report;
}

bool buchberger_verify(const RelationSet& rel) { return buchberger_check(rel).ok(); }

// -------------------------------------------------------------- order probes

std::vector<UMonomial> all_monomials_of_degree(std::size_t n, unsigned degree) {
  const std::size_t nx = n, nu = pair_count(n), vars = nx + nu;
  std::vector<UMonomial> out;
  std::vector<Exponent> e(vars, 0);
  // Multisets of size `degree` over `vars` variables.
  auto rec = [&](auto&& self, std::size_t from, unsigned left) -> void {
    if (left == 0) {
      out.emplace_back(n, std::vector<Exponent>(e.begin(), e.begin() + nx),
                       std::vector<Exponent>(e.begin() + nx, e.end()));
      return;
    }
    for (std::size_t v = from; v < vars; ++v) {
      ++e[v];
      self(self, v, left - 1);
      --e[v];
    }
  };
  if (vars > 0 || degree == 0) rec(rec, 0, degree);
  std::sort(out.begin(), out.end(), DillGreater{});
  return out;
}

ProbeReport admissibility_probe(std::size_t n, std::size_t samples, std::uint64_t seed,
                                unsigned max_degree) {
  ProbeReport report;
  std::mt19937_64 rng(seed);
  const std::size_t vars = n + pair_count(n);
  if (vars == 0) return report;
  std::uniform_int_distribution<unsigned> deg_dist(0, max_degree);
  std::uniform_int_distribution<std::size_t> var_dist(0, vars - 1);

  auto random_monomial = [&](unsigned deg) {
    std::vector<Exponent> x(n, 0), u(pair_count(n), 0);
    for (unsigned k = 0; k < deg; ++k) {
      const std::size_t v = var_dist(rng);
      if (v < n) ++x[v];
      else ++u[v - n];
    }
    return UMonomial(n, std::move(x), std::move(u));
  };
  auto describe = [](const UMonomial& m) {
    std::ostringstream os;
    for (auto i : m.x_factors()) os << "x" << i;
    for (auto [i, j] : m.u_factors()) os << "u" << i << "_" << j;
    if (m.is_one()) os << "1";
    return os.str();
  };

  for (std::size_t s = 0; s < samples; ++s) {
    // Same-degree pairs exercise the finer comparison rules more often.
    const unsigned du = deg_dist(rng);
    const bool same = (s % 2 == 0);
    UMonomial u = random_monomial(du);
    UMonomial v = random_monomial(same ? du : deg_dist(rng));
    if (s % 7 == 0) v = u;
    UMonomial w = random_monomial(deg_dist(rng));
    const auto before = dill_compare(u, v);
    const auto after = dill_compare(u * w, v * w);
    ++report.checked;
    if (before != after) {
      report.ok = false;
      report.counterexample = "u=" + describe(u) + " v=" + describe(v) + " w=" + describe(w);
      return report;
    }
  }
  return report;
}

} // namespace weitz
