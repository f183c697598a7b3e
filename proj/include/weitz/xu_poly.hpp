#pragma once

// The presentation ring K[X,U], U = {u_ij : 1 <= i < j <= n}, its projection
// pi onto K[X,Y] (u_ij -> x_i y_j - x_j y_i), the degree / interval length /
// lexicographic (DILL) monomial order, the quadratic relations R and S, and
// Groebner reduction modulo them.

#include "weitz/errors.hpp"
#include "weitz/rational.hpp"
#include "weitz/xy_poly.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace weitz {

/// Number of u-variables for n indices.
constexpr std::size_t pair_count(std::size_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

/// Position of u_ij (1 <= i < j <= n) in the canonical pair ordering: by i,
/// then by j.
constexpr std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
  return (i - 1) * (2 * n - i) / 2 + (j - i - 1);
}

/// (i, j) for a pair position; inverse of pair_index.
std::pair<std::size_t, std::size_t> pair_at(std::size_t n, std::size_t index);

/// Comparison key realizing the DILL order.
///   c     degree in X
///   d     degree in U
///   length  total interval length sum (k - j) over u_jk factors
///   omega (i_1..i_c, j_1..j_d, k_1..k_d) with factors in canonical order
struct DILLKey {
  unsigned c = 0;
  unsigned d = 0;
  unsigned length = 0;
  std::vector<std::uint32_t> omega;
};

/// Three-way DILL comparison of keys. Larger c, then larger d, then larger
/// total length wins. On ties the omega tuples are scanned and the tuple
/// holding the SMALLER entry at the first difference is the GREATER one.
/// This is the reverse of the convention of lead_xy in K[X,Y].
std::strong_ordering dill_compare(const DILLKey& v, const DILLKey& w);

/// x^a prod u_ij^e_ij. Immutable; the DILL key is computed at construction.
class UMonomial {
public:
  UMonomial() = default;
  explicit UMonomial(std::size_t n);
  UMonomial(std::size_t n, std::vector<Exponent> x, std::vector<Exponent> u);

  static UMonomial x(std::size_t n, std::size_t i, Exponent e = 1);
  /// Requires i < j.
  static UMonomial u(std::size_t n, std::size_t i, std::size_t j, Exponent e = 1);

  std::size_t n() const { return n_; }
  Exponent x_exp(std::size_t i) const { return x_[i - 1]; }
  Exponent u_exp(std::size_t i, std::size_t j) const { return u_[pair_index(n_, i, j)]; }
  std::span<const Exponent> x_exponents() const { return x_; }
  std::span<const Exponent> u_exponents() const { return u_; }

  const DILLKey& key() const { return key_; }
  unsigned deg_x() const { return key_.c; }
  unsigned deg_u() const { return key_.d; }
  /// Degree of pi(v) in X and Y: (c + d, d).
  std::pair<unsigned, unsigned> bidegree() const { return {key_.c + key_.d, key_.d}; }
  /// Total degree of pi(v): c + 2d.
  unsigned weight() const { return key_.c + 2 * key_.d; }
  bool is_one() const { return key_.c == 0 && key_.d == 0; }

  /// x indices ascending with multiplicity.
  std::vector<std::size_t> x_factors() const;
  /// u pairs in canonical order with multiplicity.
  std::vector<std::pair<std::size_t, std::size_t>> u_factors() const;

  bool divides(const UMonomial& other) const;
  UMonomial quotient_of(const UMonomial& other) const;
  bool coprime(const UMonomial& other) const;
  UMonomial lcm(const UMonomial& other) const;

  friend UMonomial operator*(const UMonomial& a, const UMonomial& b);

  friend bool operator==(const UMonomial& a, const UMonomial& b) {
    return a.n_ == b.n_ && a.x_ == b.x_ && a.u_ == b.u_;
  }

private:
  std::size_t n_ = 0;
  std::vector<Exponent> x_;
  std::vector<Exponent> u_;
  DILLKey key_;
};

/// Three-way DILL comparison; throws DimensionMismatch on differing n.
std::strong_ordering dill_compare(const UMonomial& v, const UMonomial& w);

struct DillGreater {
  bool operator()(const UMonomial& a, const UMonomial& b) const {
    return dill_compare(a.key(), b.key()) > 0;
  }
};

class UPolynomial {
public:
  // DILL-descending, so begin() is the leading term.
  using TermMap = std::map<UMonomial, Rational, DillGreater>;

  UPolynomial() = default;
  explicit UPolynomial(std::size_t n) : n_(n) {}
  UPolynomial(const UMonomial& m, const Rational& c = 1);

  static UPolynomial constant(std::size_t n, const Rational& c);
  static UPolynomial x(std::size_t n, std::size_t i) { return UPolynomial(UMonomial::x(n, i)); }
  /// Accepts i > j (returns -u_ji); rejects i == j.
  static UPolynomial u(std::size_t n, std::size_t i, std::size_t j);

  std::size_t n() const { return n_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const UMonomial& m) const;
  void add_term(const UMonomial& m, const Rational& c);

  UPolynomial& operator+=(const UPolynomial& g);
  UPolynomial& operator-=(const UPolynomial& g);
  UPolynomial& operator*=(const Rational& c);
  UPolynomial operator-() const;

  friend UPolynomial operator+(UPolynomial f, const UPolynomial& g) { return f += g; }
  friend UPolynomial operator-(UPolynomial f, const UPolynomial& g) { return f -= g; }
  friend UPolynomial operator*(UPolynomial f, const Rational& c) { return f *= c; }
  friend UPolynomial operator*(const Rational& c, UPolynomial f) { return f *= c; }
  friend UPolynomial operator*(const UPolynomial& f, const UPolynomial& g);
  friend UPolynomial operator*(const UPolynomial& f, const UMonomial& m);

  friend bool operator==(const UPolynomial& f, const UPolynomial& g) {
    return f.n_ == g.n_ && f.terms_ == g.terms_;
  }

private:
  std::size_t n_ = 0;
  TermMap terms_;
};

UPolynomial pow(const UPolynomial& f, unsigned e);

/// Re-embeds P into K[X,U] on m indices by index inclusion.
UPolynomial change_arity(const UPolynomial& p, std::size_t m);

/// The ring map x_i -> x_i, u_jk -> x_j y_k - x_k y_j.
XYPolynomial pi(const UPolynomial& p);
XYPolynomial pi(const UMonomial& m);

/// DILL-leading monomial. Throws ZeroPolynomial.
UMonomial lead_dill(const UPolynomial& p);

// ------------------------------------------------------------------ relations

enum class RelationKind { S, R };

/// s(i,j,k) = x_i u_jk - x_j u_ik + x_k u_ij      (i < j < k)
/// r(i,j,k,l) = u_ij u_kl - u_ik u_jl + u_il u_jk (i < j < k < l)
struct Relation {
  RelationKind kind;
  std::array<std::size_t, 4> idx{};  // l unused for S
  UPolynomial poly;
  UMonomial lead;
  Rational lead_coefficient;

  std::string name() const;
};

Relation make_s(std::size_t n, std::size_t i, std::size_t j, std::size_t k);
Relation make_r(std::size_t n, std::size_t i, std::size_t j, std::size_t k, std::size_t l);

/// An ordered list of relations with cached leading monomials. The standard
/// set holds all of S (lex by index tuple) followed by all of R.
class RelationSet {
public:
  explicit RelationSet(std::size_t n) : n_(n) {}
  static RelationSet standard(std::size_t n);

  std::size_t n() const { return n_; }
  const std::vector<Relation>& relations() const { return rels_; }
  std::size_t size() const { return rels_.size(); }
  std::size_t count(RelationKind kind) const;

  void add(Relation r);
  /// Copy with the relation at position pos removed.
  RelationSet without(std::size_t pos) const;

  /// First relation (in list order) whose lead divides m.
  const Relation* first_reducer(const UMonomial& m) const;
  const Relation* last_reducer(const UMonomial& m) const;

private:
  std::size_t n_;
  std::vector<Relation> rels_;
};

enum class ReductionStrategy {
  /// Reduce the DILL-largest reducible monomial by the first applicable
  /// relation (S before R, then smallest index tuple).
  LargestFirst,
  /// Reduce the DILL-smallest reducible monomial by the last applicable
  /// relation. Used to check confluence.
  SmallestFirst,
};

/// Fully reduced remainder of P modulo the relations.
UPolynomial normal_form(const UPolynomial& p, const RelationSet& rel,
                        ReductionStrategy strategy = ReductionStrategy::LargestFirst);

/// Convenience: normal form modulo the standard relation set for p.n().
UPolynomial normal_form(const UPolynomial& p);

struct BuchbergerReport {
  bool groebner = true;
  bool reduced = true;
  std::size_t pairs_total = 0;
  std::size_t pairs_skipped_coprime = 0;
  std::size_t pairs_reduced = 0;
  bool truncated = false;  // max_pairs cap hit
  std::optional<std::string> failure;

  bool ok() const { return groebner && reduced; }
};

/// Checks every S-polynomial of the set reduces to zero (skipping pairs with
/// coprime leads) and that no monomial of any relation is divisible by the
/// lead of another. max_pairs = 0 means no cap.
BuchbergerReport buchberger_check(const RelationSet& rel, std::size_t max_pairs = 0);
bool buchberger_verify(const RelationSet& rel);

struct ProbeReport {
  bool ok = true;
  std::size_t checked = 0;
  std::optional<std::string> counterexample;
};

/// Random test of u > v  =>  uw > vw (and u == v => uw == vw) on UMonomials
/// with up to max_degree factors each.
ProbeReport admissibility_probe(std::size_t n, std::size_t samples, std::uint64_t seed = 1,
                                unsigned max_degree = 4);

/// All UMonomials on n indices with exactly `degree` factors (x and u
/// together), in DILL-descending order.
std::vector<UMonomial> all_monomials_of_degree(std::size_t n, unsigned degree);

} // namespace weitz
