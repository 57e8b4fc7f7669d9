#include "ymcas/koszul.hpp"

#include "ymcas/errors.hpp"
#include "ymcas/series.hpp"

#include <gmpxx.h>

#include <stdexcept>
#include <utility>

namespace ymcas {

namespace {

std::size_t binom_sz(unsigned long n, unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  if (!b.fits_ulong_p())
    throw std::invalid_argument("koszul: basis too large to index");
  return static_cast<std::size_t>(b.get_ui());
}

std::size_t dim_sym(int n, int p) {
  if (p < 0) return 0;
  return binom_sz(static_cast<unsigned long>(n + p - 1), static_cast<unsigned long>(p));
}

void check_shape(int n) {
  if (n < 2) throw std::invalid_argument("koszul: need at least two variables");
  if (n > 16) throw std::invalid_argument("koszul: variable count out of range");
}

/// Parity class of a monomial: one bit per variable. The differentials
/// preserve the class of (monomial + e_i) on tensor factors and of the
/// monomial itself on symmetric factors, so ranks split by class.
unsigned parity_mask(const std::vector<int>& alpha) {
  unsigned m = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (alpha[i] & 1) m |= 1u << i;
  return m;
}

struct SparseMap {
  std::size_t rows = 0;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> cols;
  std::vector<unsigned> col_class;
};

SparseMap spar_d1(int n, int m) {
  const SymBasis dom = sym_basis(n, m);
  const SymBasis cod = sym_basis(n, m + 1);
  SparseMap out;
  out.rows = cod.dim();
  out.cols.reserve(dom.dim() * static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < dom.dim(); ++k)
    for (int i = 0; i < n; ++i) {
      std::vector<int> t = dom.monomials[k];
      ++t[static_cast<std::size_t>(i)];
      out.col_class.push_back(parity_mask(t));
      out.cols.push_back({{cod.index.at(t), Rational(1)}});
    }
  return out;
}

SparseMap spar_d2(int n, int m) {
  const SymBasis dom = sym_basis(n, m);
  const SymBasis cod = sym_basis(n, m + 2);
  SparseMap out;
  out.rows = cod.dim() * static_cast<std::size_t>(n);
  out.cols.reserve(dom.dim() * static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < dom.dim(); ++k)
    for (int i = 0; i < n; ++i) {
      std::map<std::size_t, Rational> acc;
      for (int j = 0; j < n; ++j) {
        std::vector<int> a = dom.monomials[k];
        a[static_cast<std::size_t>(j)] += 2;
        acc[cod.index.at(a) * static_cast<std::size_t>(n) +
            static_cast<std::size_t>(i)] += Rational(1);
        std::vector<int> b = dom.monomials[k];
        ++b[static_cast<std::size_t>(i)];
        ++b[static_cast<std::size_t>(j)];
        acc[cod.index.at(b) * static_cast<std::size_t>(n) +
            static_cast<std::size_t>(j)] -= Rational(1);
      }
      std::vector<std::pair<std::size_t, Rational>> col;
      for (const auto& [r, c] : acc)
        if (!c.is_zero()) col.emplace_back(r, c);
      std::vector<int> cls = dom.monomials[k];
      ++cls[static_cast<std::size_t>(i)];
      out.col_class.push_back(parity_mask(cls));
      out.cols.push_back(std::move(col));
    }
  return out;
}

SparseMap spar_d3(int n, int m) {
  const SymBasis dom = sym_basis(n, m);
  const SymBasis cod = sym_basis(n, m + 1);
  SparseMap out;
  out.rows = cod.dim() * static_cast<std::size_t>(n);
  out.cols.reserve(dom.dim());
  for (std::size_t k = 0; k < dom.dim(); ++k) {
    std::vector<std::pair<std::size_t, Rational>> col;
    for (int i = 0; i < n; ++i) {
      std::vector<int> t = dom.monomials[k];
      ++t[static_cast<std::size_t>(i)];
      col.emplace_back(cod.index.at(t) * static_cast<std::size_t>(n) +
                           static_cast<std::size_t>(i),
                       Rational(1));
    }
    out.col_class.push_back(parity_mask(dom.monomials[k]));
    out.cols.push_back(std::move(col));
  }
  return out;
}

/// Rank via the parity splitting: columns of distinct classes hit disjoint
/// row sets, so the rank is the sum of per-class ranks. Disjointness is
/// verified while grouping.
std::size_t blocked_rank(const SparseMap& m) {
  std::map<unsigned, std::vector<std::size_t>> groups;
  for (std::size_t c = 0; c < m.cols.size(); ++c)
    groups[m.col_class[c]].push_back(c);

  std::map<std::size_t, unsigned> row_owner;
  std::size_t total = 0;
  for (const auto& [cls, cols] : groups) {
    std::map<std::size_t, std::size_t> local;
    for (std::size_t c : cols)
      for (const auto& [r, v] : m.cols[c]) {
        auto owner = row_owner.find(r);
        if (owner == row_owner.end())
          row_owner.emplace(r, cls);
        else if (owner->second != cls)
          throw consistency_error("koszul: parity classes overlap on a row");
        local.emplace(r, 0);
      }
    std::size_t next = 0;
    for (auto& [r, pos] : local) pos = next++;
    // Transposed block: each column becomes a row; rank is unchanged.
    RatMatrix block(cols.size(), local.size());
    for (std::size_t bi = 0; bi < cols.size(); ++bi)
      for (const auto& [r, v] : m.cols[cols[bi]]) block.at(bi, local.at(r)) = v;
    total += rank(block);
  }
  return total;
}

RatMatrix dense_of(const SparseMap& m) {
  RatMatrix out(m.rows, m.cols.size());
  for (std::size_t c = 0; c < m.cols.size(); ++c)
    for (const auto& [r, v] : m.cols[c]) out.at(r, c) = v;
  return out;
}

/// Composition g . f of two sparse maps must be identically zero.
void check_zero_composition(const SparseMap& g, const SparseMap& f, const char* what) {
  if (g.cols.size() != f.rows)
    throw consistency_error(std::string("koszul: shape mismatch in ") + what);
  for (const auto& col : f.cols) {
    std::map<std::size_t, Rational> acc;
    for (const auto& [mid, v] : col)
      for (const auto& [r, w] : g.cols[mid]) acc[r] += v * w;
    for (const auto& [r, v] : acc)
      if (!v.is_zero())
        throw consistency_error(std::string("koszul: nonzero composition ") + what);
  }
}

std::size_t checked_sub(std::size_t a, std::size_t b, const char* what) {
  if (b > a)
    throw consistency_error(std::string("koszul: negative homology dimension in ") + what);
  return a - b;
}

} // namespace

SymBasis sym_basis(int n, int p) {
  check_shape(n);
  SymBasis b;
  b.n = n;
  b.p = p;
  if (p < 0) return b;
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int pos, int rem) -> void {
    if (pos == n - 1) {
      cur[static_cast<std::size_t>(pos)] = rem;
      b.monomials.push_back(cur);
      return;
    }
    for (int e = 0; e <= rem; ++e) {
      cur[static_cast<std::size_t>(pos)] = e;
      self(self, pos + 1, rem - e);
    }
  };
  rec(rec, 0, p);
  if (b.monomials.size() != dim_sym(n, p))
    throw consistency_error("sym_basis: count disagrees with the binomial");
  for (std::size_t k = 0; k < b.monomials.size(); ++k)
    b.index.emplace(b.monomials[k], k);
  return b;
}

RatMatrix mat_d1(int n, int m) {
  check_shape(n);
  if (m < 0) return RatMatrix(dim_sym(n, m + 1), 0);
  return dense_of(spar_d1(n, m));
}

RatMatrix mat_d2(int n, int m) {
  check_shape(n);
  if (m < 0)
    return RatMatrix(dim_sym(n, m + 2) * static_cast<std::size_t>(n), 0);
  return dense_of(spar_d2(n, m));
}

RatMatrix mat_d3(int n, int m) {
  check_shape(n);
  if (m < 0)
    return RatMatrix(dim_sym(n, m + 1) * static_cast<std::size_t>(n), 0);
  return dense_of(spar_d3(n, m));
}

KoszulSlice build_slice(int n, int p) {
  check_shape(n);
  if (p < 0) throw std::invalid_argument("build_slice: negative slice index");
  KoszulSlice s;
  s.n = n;
  s.p = p;
  s.d3 = mat_d3(n, p - 1);
  s.d2 = mat_d2(n, p);
  s.d1 = mat_d1(n, p + 2);
  if (p >= 1) check_zero_composition(spar_d2(n, p), spar_d3(n, p - 1), "d2 . d3");
  check_zero_composition(spar_d1(n, p + 2), spar_d2(n, p), "d1 . d2");
  return s;
}

HomologyDims homology_dims(int n, int p) {
  check_shape(n);
  if (p < 0) throw std::invalid_argument("homology_dims: negative slice index");

  HomologyDims h;
  h.p = p;

  const std::size_t rank_d1_in = p >= 1 ? blocked_rank(spar_d1(n, p - 1)) : 0;
  h.h0 = checked_sub(dim_sym(n, p), rank_d1_in, "h0");

  const SparseMap d1p = spar_d1(n, p);
  const std::size_t ker1 = checked_sub(d1p.cols.size(), blocked_rank(d1p), "ker d1");
  const std::size_t expected_ker1 =
      checked_sub(static_cast<std::size_t>(n) * dim_sym(n, p),
                  binom_sz(static_cast<unsigned long>(n + p),
                           static_cast<unsigned long>(p + 1)),
                  "ker d1 closed count");
  if (ker1 != expected_ker1)
    throw consistency_error("homology_dims: d1 kernel disagrees with the closed count");
  const std::size_t rank_d2_in = p >= 2 ? blocked_rank(spar_d2(n, p - 2)) : 0;
  h.h1 = checked_sub(ker1, rank_d2_in, "h1");

  const SparseMap d2p = spar_d2(n, p);
  const std::size_t ker2 = checked_sub(d2p.cols.size(), blocked_rank(d2p), "ker d2");
  const std::size_t rank_d3_in = p >= 1 ? blocked_rank(spar_d3(n, p - 1)) : 0;
  h.h2 = checked_sub(ker2, rank_d3_in, "h2");

  const SparseMap d3p = spar_d3(n, p);
  h.h3 = checked_sub(d3p.cols.size(), blocked_rank(d3p), "ker d3");
  return h;
}

std::vector<std::size_t> w_dims(int n, int M) {
  check_shape(n);
  if (M < 0) throw std::invalid_argument("w_dims: negative degree bound");

  std::vector<std::size_t> out(static_cast<std::size_t>(M) + 1, 0);
  for (int m = 2; m <= M; ++m) {
    const int p = m - 1;
    const SparseMap d1p = spar_d1(n, p);
    const std::size_t ker1 = checked_sub(d1p.cols.size(), blocked_rank(d1p), "ker d1");
    const std::size_t rank_d2_in = p >= 2 ? blocked_rank(spar_d2(n, p - 2)) : 0;
    out[static_cast<std::size_t>(m)] = checked_sub(ker1, rank_d2_in, "w_dims h1");
  }

  const TruncatedSeries ws = w_series(n, M);
  for (int m = 0; m <= M; ++m)
    if (mpz_class(static_cast<unsigned long>(out[static_cast<std::size_t>(m)])) != ws[m])
      throw consistency_error("w_dims: homology disagrees with the series computation");
  return out;
}

} // namespace ymcas
