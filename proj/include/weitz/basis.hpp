#pragma once

// The monomial basis of the constants algebra: normal monomials of K[X,U]
// (u-factors pairwise non-crossing, no u-factor covering an x-factor), their
// leading monomials in K[X,Y], and an independent linear-algebra oracle that
// computes ker(Delta) one bidegree at a time.

#include "weitz/xu_poly.hpp"
#include "weitz/xy_poly.hpp"

#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace weitz {

using IndexPair = std::pair<std::size_t, std::size_t>;

/// u_ik and u_jl with i < j < k < l.
struct Crossing {
  IndexPair first;
  IndexPair second;
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// x_j inside the open interval of u_ik.
struct Covering {
  std::size_t x_index;
  IndexPair pair;
  friend bool operator==(const Covering&, const Covering&) = default;
};

struct NormalityReport {
  bool is_normal = true;
  std::optional<std::variant<Covering, Crossing>> violation;
};

/// Coverings are reported before crossings; among each, the first in
/// canonical factor order.
NormalityReport is_normal(const UMonomial& v);

/// Normal monomials with c + 2d = weight, DILL-descending.
std::vector<UMonomial> enumerate_normal(std::size_t n, unsigned weight);
/// Normal monomials whose image has bidegree (d1, d2): c = d1 - d2, d = d2.
std::vector<UMonomial> enumerate_normal_bidegree(std::size_t n, unsigned d1, unsigned d2);

/// x_{i_1}..x_{i_c} x_{j_1} y_{k_1} .. x_{j_d} y_{k_d}; equals lead_xy(pi(v)).
XYMonomial lead_of(const UMonomial& v);

/// Inverse of lead_of on normal monomials. Throws NotALeadingMonomial.
UMonomial reconstruct_from_lead(const XYMonomial& m);

/// Number of normal monomials of bidegree (d1, d2); 0 when d1 < d2.
std::size_t graded_dimension(std::size_t n, unsigned d1, unsigned d2);

/// Matrix of Delta from bidegree (d1,d2) to (d1+1,d2-1), in sparse column
/// form. Monomials on both sides are listed in descending interleaved-lex
/// order.
struct GradedComponent {
  std::size_t n = 0;
  unsigned d1 = 0, d2 = 0;
  std::vector<XYMonomial> domain_basis;
  std::vector<XYMonomial> codomain_basis;
  /// columns[c] = {(row, entry)} for Delta(domain_basis[c]).
  std::vector<std::vector<std::pair<std::size_t, Integer>>> columns;

  static GradedComponent build(std::size_t n, unsigned d1, unsigned d2);
};

/// All monomials x^a y^b with |a| = d1, |b| = d2, descending.
std::vector<XYMonomial> monomials_of_bidegree(std::size_t n, unsigned d1, unsigned d2);

struct OracleResult {
  std::size_t dimension = 0;
  std::vector<XYPolynomial> basis;
};

/// Exact kernel of Delta on the (d1,d2) component by fraction-free
/// elimination. The matrix is split into the connected blocks of its
/// row/column incidence graph first; each block is eliminated densely.
OracleResult oracle_kernel(std::size_t n, unsigned d1, unsigned d2, bool want_basis = true);

/// Rank and kernel of a dense integer matrix (rows x cols, row-major) by
/// Bareiss elimination. Kernel vectors have entry 1 at their free column.
struct DenseKernel {
  std::size_t rank = 0;
  std::vector<std::vector<Rational>> kernel;
};
DenseKernel integer_kernel(std::vector<Integer> a, std::size_t rows, std::size_t cols,
                           bool want_basis = true);

} // namespace weitz
