#pragma once

// Sparse polynomials over K[X,Y] = Q[x_1..x_n, y_1..y_n] together with the
// derivation Delta (Delta(x_i) = 0, Delta(y_i) = x_i) and the utilities the
// kernel decomposition needs: grading splits, the substitution endomorphism
// phi, exact division and the lexicographic leading monomial.

#include "weitz/errors.hpp"
#include "weitz/rational.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace weitz {

using Exponent = std::uint32_t;

/// Monomial x^a y^b over n index pairs.
///
/// Exponents are stored interleaved as (a_1, b_1, ..., a_n, b_n). With this
/// layout the plain lexicographic comparison of the storage vector is the
/// leading-term order used everywhere in K[X,Y]: the larger tuple is the
/// larger monomial. (The DILL order on K[X,U] uses the opposite convention
/// on its index tuple; see xu_poly.hpp.)
class XYMonomial {
public:
  XYMonomial() = default;
  explicit XYMonomial(std::size_t n) : n_(n), e_(2 * n, 0) {}
  XYMonomial(std::span<const Exponent> a, std::span<const Exponent> b);

  static XYMonomial one(std::size_t n) { return XYMonomial(n); }
  static XYMonomial x(std::size_t n, std::size_t i, Exponent e = 1);
  static XYMonomial y(std::size_t n, std::size_t i, Exponent e = 1);

  std::size_t n() const { return n_; }
  // 1-based accessors.
  Exponent x_exp(std::size_t i) const { return e_[2 * (i - 1)]; }
  Exponent y_exp(std::size_t i) const { return e_[2 * (i - 1) + 1]; }
  void set_x(std::size_t i, Exponent e) { e_[2 * (i - 1)] = e; }
  void set_y(std::size_t i, Exponent e) { e_[2 * (i - 1) + 1] = e; }

  std::span<const Exponent> interleaved() const { return e_; }
  std::vector<Exponent> x_exponents() const;
  std::vector<Exponent> y_exponents() const;

  unsigned deg_x() const;
  unsigned deg_y() const;
  unsigned degree() const { return deg_x() + deg_y(); }
  bool is_one() const;

  bool divides(const XYMonomial& other) const;
  // Requires divides(other).
  XYMonomial quotient_of(const XYMonomial& other) const;

  XYMonomial& operator*=(const XYMonomial& other);
  friend XYMonomial operator*(XYMonomial a, const XYMonomial& b) { return a *= b; }

  friend bool operator==(const XYMonomial&, const XYMonomial&) = default;
  friend std::strong_ordering operator<=>(const XYMonomial& a, const XYMonomial& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.e_ <=> b.e_;
  }

private:
  std::size_t n_ = 0;
  std::vector<Exponent> e_;
};

class XYPolynomial {
public:
  // Descending in the interleaved lex order, so begin() is the leading term.
  using TermMap = std::map<XYMonomial, Rational, std::greater<>>;

  XYPolynomial() = default;
  explicit XYPolynomial(std::size_t n) : n_(n) {}
  XYPolynomial(const XYMonomial& m, const Rational& c = 1);

  static XYPolynomial constant(std::size_t n, const Rational& c);
  static XYPolynomial x(std::size_t n, std::size_t i) { return XYPolynomial(XYMonomial::x(n, i)); }
  static XYPolynomial y(std::size_t n, std::size_t i) { return XYPolynomial(XYMonomial::y(n, i)); }

  std::size_t n() const { return n_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const XYMonomial& m) const;
  // Adds c*m, dropping the entry if it cancels.
  void add_term(const XYMonomial& m, const Rational& c);

  XYPolynomial& operator+=(const XYPolynomial& g);
  XYPolynomial& operator-=(const XYPolynomial& g);
  XYPolynomial& operator*=(const Rational& c);
  XYPolynomial operator-() const;

  friend XYPolynomial operator+(XYPolynomial f, const XYPolynomial& g) { return f += g; }
  friend XYPolynomial operator-(XYPolynomial f, const XYPolynomial& g) { return f -= g; }
  friend XYPolynomial operator*(XYPolynomial f, const Rational& c) { return f *= c; }
  friend XYPolynomial operator*(const Rational& c, XYPolynomial f) { return f *= c; }
  friend XYPolynomial operator*(const XYPolynomial& f, const XYPolynomial& g);
  friend XYPolynomial operator*(const XYPolynomial& f, const XYMonomial& m);

  friend bool operator==(const XYPolynomial& f, const XYPolynomial& g) {
    return f.n_ == g.n_ && f.terms_ == g.terms_;
  }

  // Degree accessors throw ZeroPolynomial on 0.
  unsigned total_degree() const;
  unsigned deg_x() const;
  unsigned deg_y() const;

private:
  std::size_t n_ = 0;
  TermMap terms_;
};

XYPolynomial pow(const XYPolynomial& f, unsigned e);

/// Delta = sum_i x_i d/dy_i.
XYPolynomial delta(const XYPolynomial& f);
bool is_constant(const XYPolynomial& f);

/// Components homogeneous in (deg_X, deg_Y).
std::map<std::pair<unsigned, unsigned>, XYPolynomial> bidegree_split(const XYPolynomial& f);

/// Components keyed by total degree in (x_k, y_k); k defaults to n.
std::map<unsigned, XYPolynomial> xnyn_split(const XYPolynomial& f);
std::map<unsigned, XYPolynomial> xnyn_split(const XYPolynomial& f, std::size_t k);

/// Leading monomial in the interleaved lex order. Throws ZeroPolynomial.
XYMonomial lead_xy(const XYPolynomial& f);

/// Exact quotient f/g. Throws DivisionByZero if g = 0, NotDivisible if g
/// does not divide f.
XYPolynomial divide_exact(const XYPolynomial& f, const XYPolynomial& g);
std::optional<XYPolynomial> try_divide_exact(const XYPolynomial& f, const XYPolynomial& g);

/// Largest q with x_k^q dividing f (f != 0).
Exponent max_x_power(const XYPolynomial& f, std::size_t k);

/// Re-embeds f into the ring with m index pairs. Shrinking requires the
/// dropped variables to be absent (InvalidArgument otherwise).
XYPolynomial change_arity(const XYPolynomial& f, std::size_t m);

/// f with x_n -> sum_i t_i x_i and y_n -> sum_i t_i y_i for symbolic
/// parameters t_1..t_{n-1}, stored as a polynomial in t whose coefficients
/// lie in K[X,Y]. Zero iff phi_alpha(f) = 0 for every alpha in K^{n-1}.
class SubstitutionResult {
public:
  using TExponent = std::vector<Exponent>;

  SubstitutionResult(std::size_t n, std::size_t params) : n_(n), params_(params) {}

  std::size_t n() const { return n_; }
  std::size_t params() const { return params_; }
  /// n base variables plus params fresh ones.
  std::size_t extended_variable_count() const { return n_ + params_; }

  const std::map<TExponent, XYPolynomial>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  void add(const TExponent& t, const XYPolynomial& c);

  /// Specializes t = alpha.
  XYPolynomial evaluate(std::span<const Rational> alpha) const;

  friend bool operator==(const SubstitutionResult&, const SubstitutionResult&) = default;

private:
  std::size_t n_;
  std::size_t params_;
  std::map<TExponent, XYPolynomial> coeffs_;
};

/// Throws InvalidArity for n = 1.
SubstitutionResult phi_symbolic(const XYPolynomial& f);

/// Delta extended to K[X,Y][t] by fixing the t-parameters.
SubstitutionResult delta(const SubstitutionResult& s);

/// phi_alpha for a concrete alpha of length n-1.
XYPolynomial phi_alpha(const XYPolynomial& f, std::span<const Rational> alpha);

/// w_alpha = (sum alpha_i x_i) y_n - (sum alpha_i y_i) x_n.
XYPolynomial w_alpha(std::size_t n, std::span<const Rational> alpha);

} // namespace weitz
