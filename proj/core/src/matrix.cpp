#include "ymcas/matrix.hpp"

#include <stdexcept>

namespace ymcas {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

void RatMatrix::append_row(const std::vector<Rational>& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_)
    throw std::invalid_argument("RatMatrix::append_row: width mismatch");
  e_.insert(e_.end(), row.begin(), row.end());
  ++rows_;
}

std::vector<Rational> RatMatrix::row(std::size_t r) const {
  return std::vector<Rational>(e_.begin() + r * cols_, e_.begin() + (r + 1) * cols_);
}

namespace {

void swap_rows(RatMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(a, c), m.at(b, c));
}

// Forward elimination with first-nonzero pivoting. If reduce is set the
// result is fully reduced (unit pivots, zeros above); otherwise echelon only.
std::vector<std::size_t> eliminate(RatMatrix& m, bool reduce) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && m.at(sel, c).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    swap_rows(m, r, sel);
    const Rational pivot = m.at(r, c);
    for (std::size_t cc = c; cc < m.cols(); ++cc) m.at(r, cc) /= pivot;
    std::size_t lo = reduce ? 0 : r + 1;
    for (std::size_t i = lo; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      const Rational f = m.at(i, c);
      for (std::size_t cc = c; cc < m.cols(); ++cc) {
        if (!m.at(r, cc).is_zero()) m.at(i, cc) -= f * m.at(r, cc);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

} // namespace

RrefResult rref(const RatMatrix& m) {
  RrefResult res;
  res.mat = m;
  res.pivots = eliminate(res.mat, true);
  return res;
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix w = m;
  return eliminate(w, false).size();
}

std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : r.pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> out;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rational> v(m.cols());
    v[c] = Rational(1);
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      v[r.pivots[i]] = -r.mat.at(i, c);
    out.push_back(std::move(v));
  }
  return out;
}

bool in_span(const std::vector<Rational>& v,
             const std::vector<std::vector<Rational>>& basis) {
  if (basis.empty()) {
    for (const Rational& x : v)
      if (!x.is_zero()) return false;
    return true;
  }
  RatMatrix m(0, 0);
  for (const auto& b : basis) m.append_row(b);
  RrefResult r = rref(m);
  std::vector<Rational> w = v;
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    const Rational f = w[r.pivots[i]];
    if (f.is_zero()) continue;
    for (std::size_t c = 0; c < w.size(); ++c)
      if (!r.mat.at(i, c).is_zero()) w[c] -= f * r.mat.at(i, c);
  }
  for (const Rational& x : w)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<Rational> solve_square(const RatMatrix& a,
                                   const std::vector<Rational>& b) {
  if (a.rows() != a.cols() || b.size() != a.rows())
    throw std::invalid_argument("solve_square: shape mismatch");
  const std::size_t n = a.rows();
  RatMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n) = b[i];
  }
  std::vector<std::size_t> piv = eliminate(aug, true);
  if (piv.size() != n || piv.back() != n - 1)
    throw std::domain_error("solve_square: singular matrix");
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug.at(i, n);
  return x;
}

std::size_t span_dim(const std::vector<std::vector<Rational>>& vectors) {
  if (vectors.empty()) return 0;
  RatMatrix m(0, 0);
  for (const auto& v : vectors) m.append_row(v);
  return rank(m);
}

RatMatrix inverse(const RatMatrix& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = a.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = Rational(1);
  }
  std::vector<std::size_t> piv = eliminate(aug, true);
  if (piv.size() != n || piv.back() != n - 1)
    throw std::domain_error("inverse: singular matrix");
  RatMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
  return out;
}

void IncrementalSpan::reduce(std::vector<Rational>& v) const {
  for (const auto& [lead, row] : rows_) {
    const Rational f = v[lead];
    if (f.is_zero()) continue;
    for (std::size_t c = lead; c < cols_; ++c)
      if (!row[c].is_zero()) v[c] -= f * row[c];
  }
}

bool IncrementalSpan::insert(std::vector<Rational> v) {
  if (v.size() != cols_)
    throw std::invalid_argument("IncrementalSpan: length mismatch");
  reduce(v);
  std::size_t lead = cols_;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!v[c].is_zero()) { lead = c; break; }
  if (lead == cols_) return false;
  const Rational inv = Rational(1) / v[lead];
  for (std::size_t c = lead; c < cols_; ++c) v[c] *= inv;
  // Keep existing rows reduced against the newcomer so later membership
  // tests stay a single pass.
  for (auto& [l, row] : rows_) {
    const Rational f = row[lead];
    if (f.is_zero()) continue;
    for (std::size_t c = lead; c < cols_; ++c)
      if (!v[c].is_zero()) row[c] -= f * v[c];
  }
  rows_.emplace(lead, std::move(v));
  return true;
}

bool IncrementalSpan::contains(std::vector<Rational> v) const {
  if (v.size() != cols_)
    throw std::invalid_argument("IncrementalSpan: length mismatch");
  reduce(v);
  for (const Rational& x : v)
    if (!x.is_zero()) return false;
  return true;
}

} // namespace ymcas
