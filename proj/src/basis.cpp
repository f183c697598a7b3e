#include "weitz/basis.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace weitz {

NormalityReport is_normal(const UMonomial& v) {
  const auto xs = v.x_factors();
  auto pairs = v.u_factors();
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  for (std::size_t j : xs)
    for (const auto& pr : pairs)
      if (pr.first < j && j < pr.second) return {false, Covering{j, pr}};

  // Canonical order has a.first <= b.first, so a crossing means
  // a.first < b.first < a.second < b.second.
  for (std::size_t p = 0; p < pairs.size(); ++p)
    for (std::size_t q = p + 1; q < pairs.size(); ++q) {
      const auto& a = pairs[p];
      const auto& b = pairs[q];
      if (a.first < b.first && b.first < a.second && a.second < b.second)
        return {false, Crossing{a, b}};
    }
  return {};
}

namespace {

void require_n(std::size_t n) {
  if (n < 1) throw InvalidArgument("n must be at least 1");
}

bool crosses(const IndexPair& a, const IndexPair& b) {
  return (a.first < b.first && b.first < a.second && a.second < b.second) ||
         (b.first < a.first && a.first < b.second && b.second < a.second);
}

} // namespace

std::vector<UMonomial> enumerate_normal_bidegree(std::size_t n, unsigned d1, unsigned d2) {
  require_n(n);
  std::vector<UMonomial> out;
  if (d1 < d2) return out;
  const unsigned c = d1 - d2, d = d2;
  const std::size_t np = pair_count(n);

  std::vector<IndexPair> chosen;
  std::vector<Exponent> uexp(np, 0), xexp(n, 0);

  auto fill_x = [&](auto&& self, const std::vector<std::size_t>& allowed, std::size_t from,
                    unsigned left) -> void {
    if (left == 0) {
      UMonomial m(n, xexp, uexp);
      if (is_normal(m).is_normal) out.push_back(std::move(m));
      return;
    }
    for (std::size_t a = from; a < allowed.size(); ++a) {
      ++xexp[allowed[a] - 1];
      self(self, allowed, a, left - 1);
      --xexp[allowed[a] - 1];
    }
  };

  auto fill_u = [&](auto&& self, std::size_t from, unsigned left) -> void {
    if (left == 0) {
      std::vector<std::size_t> allowed;
      for (std::size_t i = 1; i <= n; ++i) {
        const bool covered = std::any_of(chosen.begin(), chosen.end(), [&](const IndexPair& p) {
          return p.first < i && i < p.second;
        });
        if (!covered) allowed.push_back(i);
      }
      fill_x(fill_x, allowed, 0, c);
      return;
    }
    for (std::size_t p = from; p < np; ++p) {
      const IndexPair pr = pair_at(n, p);
      if (std::any_of(chosen.begin(), chosen.end(),
                      [&](const IndexPair& q) { return crosses(pr, q); }))
        continue;
      chosen.push_back(pr);
      ++uexp[p];
      self(self, p, left - 1);
      --uexp[p];
      chosen.pop_back();
    }
  };

  fill_u(fill_u, 0, d);
  std::sort(out.begin(), out.end(), DillGreater{});
  return out;
}

std::vector<UMonomial> enumerate_normal(std::size_t n, unsigned weight) {
  std::vector<UMonomial> out;
  for (unsigned d = 0; 2 * d <= weight; ++d) {
    const unsigned c = weight - 2 * d;
    auto part = enumerate_normal_bidegree(n, c + d, d);
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  std::sort(out.begin(), out.end(), DillGreater{});
  return out;
}

XYMonomial lead_of(const UMonomial& v) {
  XYMonomial m(v.n());
  for (std::size_t i = 1; i <= v.n(); ++i) m.set_x(i, v.x_exp(i));
  for (const auto& [j, k] : v.u_factors()) {
    m.set_x(j, m.x_exp(j) + 1);
    m.set_y(k, m.y_exp(k) + 1);
  }
  return m;
}

UMonomial reconstruct_from_lead(const XYMonomial& lead) {
  const std::size_t n = lead.n();
  auto a = lead.x_exponents();
  auto b = lead.y_exponents();
  std::vector<Exponent> u(pair_count(n), 0);
  for (;;) {
    std::size_t k = 0;
    for (std::size_t i = 1; i <= n; ++i)
      if (b[i - 1] != 0) {
        k = i;
        break;
      }
    if (k == 0) break;
    std::size_t j = 0;
    for (std::size_t i = k - 1; i >= 1; --i)
      if (a[i - 1] != 0) {
        j = i;
        break;
      }
    if (j == 0)
      throw NotALeadingMonomial("no x-factor to the left of y(" + std::to_string(k) + ")");
    --a[j - 1];
    --b[k - 1];
    ++u[pair_index(n, j, k)];
  }
  return UMonomial(n, std::move(a), std::move(u));
}

std::size_t graded_dimension(std::size_t n, unsigned d1, unsigned d2) {
  if (d1 < d2) return 0;
  return enumerate_normal_bidegree(n, d1, d2).size();
}

// -------------------------------------------------------------------- oracle

namespace {

void compositions(std::size_t n, unsigned total, std::vector<std::vector<Exponent>>& out) {
  std::vector<Exponent> e(n, 0);
  auto rec = [&](auto&& self, std::size_t pos, unsigned left) -> void {
    if (pos + 1 == n) {
      e[pos] = left;
      out.push_back(e);
      return;
    }
    for (unsigned v = 0; v <= left; ++v) {
      e[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, total);
}

} // namespace

std::vector<XYMonomial> monomials_of_bidegree(std::size_t n, unsigned d1, unsigned d2) {
  require_n(n);
  std::vector<std::vector<Exponent>> as, bs;
  compositions(n, d1, as);
  compositions(n, d2, bs);
  std::vector<XYMonomial> out;
  out.reserve(as.size() * bs.size());
  for (const auto& a : as)
    for (const auto& b : bs) out.emplace_back(a, b);
  std::sort(out.begin(), out.end(), std::greater<>{});
  return out;
}

GradedComponent GradedComponent::build(std::size_t n, unsigned d1, unsigned d2) {
  GradedComponent g;
  g.n = n;
  g.d1 = d1;
  g.d2 = d2;
  g.domain_basis = monomials_of_bidegree(n, d1, d2);
  if (d2 > 0) g.codomain_basis = monomials_of_bidegree(n, d1 + 1, d2 - 1);

  std::map<XYMonomial, std::size_t> row_of;
  for (std::size_t r = 0; r < g.codomain_basis.size(); ++r) row_of.emplace(g.codomain_basis[r], r);

  g.columns.resize(g.domain_basis.size());
  for (std::size_t c = 0; c < g.domain_basis.size(); ++c) {
    const XYPolynomial image = delta(XYPolynomial(g.domain_basis[c]));
    for (const auto& [m, coef] : image.terms())
      g.columns[c].emplace_back(row_of.at(m), Integer(coef.get_num()));
  }
  return g;
}

DenseKernel integer_kernel(std::vector<Integer> a, std::size_t rows, std::size_t cols,
                           bool want_basis) {
  auto at = [&](std::size_t r, std::size_t c) -> Integer& { return a[r * cols + c]; };

  std::vector<std::size_t> pivot_cols;
  std::vector<bool> is_pivot(cols, false);
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t p = r;
    while (p < rows && at(p, col) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(p, j), at(r, j));
    const Integer piv = at(r, col);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Integer lead = at(i, col);
      for (std::size_t j = col + 1; j < cols; ++j) {
        Integer v = piv * at(i, j) - lead * at(r, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        at(i, j) = std::move(v);
      }
      at(i, col) = 0;
    }
    prev = piv;
    pivot_cols.push_back(col);
    is_pivot[col] = true;
    ++r;
  }

  DenseKernel out;
  out.rank = pivot_cols.size();
  if (!want_basis) {
    out.kernel.resize(cols - out.rank);
    return out;
  }
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(cols, 0);
    x[f] = 1;
    for (std::size_t pr = pivot_cols.size(); pr-- > 0;) {
      const std::size_t pc = pivot_cols[pr];
      Rational s = 0;
      for (std::size_t j = pc + 1; j < cols; ++j)
        if (at(pr, j) != 0 && x[j] != 0) s += Rational(at(pr, j)) * x[j];
      x[pc] = -s / Rational(at(pr, pc));
    }
    out.kernel.push_back(std::move(x));
  }
  return out;
}

OracleResult oracle_kernel(std::size_t n, unsigned d1, unsigned d2, bool want_basis) {
  const GradedComponent g = GradedComponent::build(n, d1, d2);
  const std::size_t ncols = g.domain_basis.size();

  // Union columns that share a row.
  std::vector<std::size_t> parent(ncols);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<std::size_t> first_col_of_row(g.codomain_basis.size(), ncols);
  for (std::size_t c = 0; c < ncols; ++c)
    for (const auto& [row, val] : g.columns[c]) {
      if (first_col_of_row[row] == ncols) first_col_of_row[row] = c;
      else parent[find(c)] = find(first_col_of_row[row]);
    }

  std::map<std::size_t, std::vector<std::size_t>> blocks;
  for (std::size_t c = 0; c < ncols; ++c) blocks[find(c)].push_back(c);

  OracleResult result;
  for (const auto& [root, cols] : blocks) {
    std::map<std::size_t, std::size_t> local_row;
    for (std::size_t c : cols)
      for (const auto& [row, val] : g.columns[c]) local_row.emplace(row, 0);
    std::size_t idx = 0;
    for (auto& [row, local] : local_row) local = idx++;

    const std::size_t br = local_row.size(), bc = cols.size();
    std::vector<Integer> dense(br * bc, 0);
    for (std::size_t lc = 0; lc < bc; ++lc)
      for (const auto& [row, val] : g.columns[cols[lc]]) dense[local_row[row] * bc + lc] = val;

    DenseKernel k = integer_kernel(std::move(dense), br, bc, want_basis);
    result.dimension += bc - k.rank;
    if (!want_basis) continue;
    for (const auto& vec : k.kernel) {
      XYPolynomial p(n);
      for (std::size_t lc = 0; lc < bc; ++lc) p.add_term(g.domain_basis[cols[lc]], vec[lc]);
      result.basis.push_back(std::move(p));
    }
  }
  return result;
}

} // namespace weitz
