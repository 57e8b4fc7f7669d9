#include "ymcas/ymquotient.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ymcas/errors.hpp"
#include "ymcas/series.hpp"

namespace ymcas {

void lievec_add_scaled(LieVec& into, const Rational& c, const LieVec& v) {
  if (c.is_zero()) return;
  for (const auto& [i, x] : v) {
    Rational s = into[i] += c * x;
    if (s.is_zero()) into.erase(i);
  }
}

namespace {

// Multidegree mod 2 of a word, one bit per letter. Every relator is
// homogeneous for this Z_2^n grading and bracketing with x_a shifts it by a
// fixed bit, so the whole quotient ideal splits into parity blocks. Row
// reduction never mixes blocks; exploiting that keeps the per-degree rref
// small.
unsigned parity_mask(const Word& w) {
  unsigned m = 0;
  for (int c : w) m ^= 1u << (c - 1);
  return m;
}

// Right-nested bracketing [x_{w0}, [x_{w1}, [...]]] used by the published
// n = 3 labels x_{ij}, x_{ijk}, x_{ijkl}.
BracketTree nested_tree(const Word& w) {
  if (w.size() == 1) return tree_leaf(w[0]);
  return tree_node(tree_leaf(w[0]), nested_tree(Word(w.begin() + 1, w.end())));
}

// The defining relator sum_i [x_i, [x_i, x_j]] as a free Lie element.
FreeLieElement relator(int n, int j) {
  FreeLieElement r = lie_zero(n);
  for (int i = 1; i <= n; ++i) {
    FreeLieElement inner = lie_bracket(lie_generator(n, i), lie_generator(n, j));
    r = lie_add(r, lie_bracket(lie_generator(n, i), inner));
  }
  return r;
}

} // namespace

GradedNilpotentLie GradedNilpotentLie::build(int n, int l) {
  if (n < 2) throw std::invalid_argument("GradedNilpotentLie::build: n must be at least 2");
  if (l < 1 || l > degree_cap(8))
    throw std::invalid_argument("GradedNilpotentLie::build: cutoff outside 1..degree cap");

  GradedNilpotentLie g;
  g.n_ = n;
  g.l_ = l;
  g.deg_.resize(l);
  for (int j = 1; j <= l; ++j) {
    auto& dd = g.deg_[j - 1];
    dd.lyndon = lyndon_basis(n, j);
    for (std::size_t k = 0; k < dd.lyndon.size(); ++k) dd.windex.emplace(dd.lyndon[k], k);
  }

  // Ideal components, degree by degree. Degree 3 is spanned by the n
  // relators; above that I_j = [V, I_{j-1}] exhausts the ideal because the
  // free Lie algebra is generated in degree 1, so ad of any element is an
  // iterated composition of ad's of generators.
  using SparseRow = std::vector<std::pair<std::size_t, Rational>>;
  std::vector<SparseRow> prev_rows; // full rows of I_{j-1}, pivot included

  for (int j = 3; j <= l; ++j) {
    auto& dd = g.deg_[j - 1];
    std::vector<SparseRow> rows;

    if (j == 3) {
      for (int t = 1; t <= n; ++t) {
        SparseRow row;
        for (const auto& [w, c] : relator(n, t).terms) row.emplace_back(dd.windex.at(w), c);
        rows.push_back(std::move(row));
      }
    } else {
      // Free brackets [x_a, b_w] for every Lyndon word w of degree j-1,
      // expanded once and reused across all rows.
      const auto& prev = g.deg_[j - 2];
      std::vector<std::vector<SparseRow>> adg(n);
      for (int a = 0; a < n; ++a) adg[a].resize(prev.lyndon.size());
      for (std::size_t wpos = 0; wpos < prev.lyndon.size(); ++wpos) {
        FreeLieElement bw = lie_word(n, prev.lyndon[wpos]);
        for (int a = 1; a <= n; ++a) {
          FreeLieElement br = lie_bracket(lie_generator(n, a), bw);
          SparseRow row;
          for (const auto& [w, c] : br.terms) row.emplace_back(dd.windex.at(w), c);
          adg[a - 1][wpos] = std::move(row);
        }
      }
      for (const SparseRow& r : prev_rows)
        for (int a = 0; a < n; ++a) {
          std::map<std::size_t, Rational> acc;
          for (const auto& [wpos, c] : r)
            for (const auto& [pos, v] : adg[a][wpos]) {
              Rational s = acc[pos] += c * v;
              if (s.is_zero()) acc.erase(pos);
            }
          if (!acc.empty()) rows.emplace_back(acc.begin(), acc.end());
        }
    }

    // Row reduce per parity block. Each row is parity homogeneous, and
    // elimination only ever combines rows sharing a pivot column, so the
    // blockwise rref has exactly the pivots of the global one.
    std::map<unsigned, std::vector<std::size_t>> block_cols;
    for (std::size_t pos = 0; pos < dd.lyndon.size(); ++pos)
      block_cols[parity_mask(dd.lyndon[pos])].push_back(pos);
    std::map<unsigned, std::vector<const SparseRow*>> block_rows;
    for (const SparseRow& r : rows) {
      unsigned mask = parity_mask(dd.lyndon[r.front().first]);
      for (const auto& [pos, c] : r)
        if (parity_mask(dd.lyndon[pos]) != mask)
          throw consistency_error("build: ideal row mixes parity blocks");
      block_rows[mask].push_back(&r);
    }

    for (const auto& [mask, cols] : block_cols) {
      auto it = block_rows.find(mask);
      if (it == block_rows.end()) continue;
      std::map<std::size_t, std::size_t> local; // global pos -> block column
      for (std::size_t k = 0; k < cols.size(); ++k) local.emplace(cols[k], k);
      RatMatrix m(it->second.size(), cols.size());
      for (std::size_t r = 0; r < it->second.size(); ++r)
        for (const auto& [pos, c] : *it->second[r]) m.at(r, local.at(pos)) = c;
      RrefResult red = rref(m);
      for (std::size_t k = 0; k < red.pivots.size(); ++k) {
        SparseRow rest;
        for (std::size_t c = red.pivots[k] + 1; c < cols.size(); ++c)
          if (!red.mat.at(k, c).is_zero()) rest.emplace_back(cols[c], red.mat.at(k, c));
        dd.rows.emplace(cols[red.pivots[k]], std::move(rest));
      }
    }

    prev_rows.clear();
    for (const auto& [p, rest] : dd.rows) {
      SparseRow full;
      full.emplace_back(p, Rational(1));
      full.insert(full.end(), rest.begin(), rest.end());
      std::sort(full.begin(), full.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      prev_rows.push_back(std::move(full));
    }
  }

  // Canonical basis: Lyndon words that are not rref pivots, in degree order
  // then lex order.
  for (int j = 1; j <= l; ++j) {
    auto& dd = g.deg_[j - 1];
    dd.label_of.assign(dd.lyndon.size(), -1);
    for (std::size_t pos = 0; pos < dd.lyndon.size(); ++pos) {
      if (dd.rows.count(pos)) continue;
      dd.label_of[pos] = static_cast<std::ptrdiff_t>(g.labels_.size());
      g.label_index_.emplace(dd.lyndon[pos], g.labels_.size());
      g.labels_.push_back(dd.lyndon[pos]);
      g.label_degree_.push_back(j);
    }
  }

  // Structure constants by bracketing basis lifts in the free algebra and
  // projecting back.
  for (std::size_t i = 0; i < g.labels_.size(); ++i)
    for (std::size_t k = i + 1; k < g.labels_.size(); ++k) {
      int s = g.label_degree_[i] + g.label_degree_[k];
      if (s > l) break; // degrees ascend with the index, so later k only grow
      FreeLieElement br = lie_bracket(lie_word(n, g.labels_[i]), lie_word(n, g.labels_[k]));
      LieVec v = g.reduce_free(br);
      for (const auto& [t, c] : v)
        if (g.label_degree_[t] != s)
          throw consistency_error("build: bracket left its degree component");
      if (!v.empty()) g.sc_.emplace(std::make_pair(i, k), std::move(v));
    }

  g.verify();
  return g;
}

void GradedNilpotentLie::verify() const {
  // Dimensions against the independent Moebius count.
  DimTable expected = lie_dims_moebius(n_, l_);
  for (int j = 1; j <= l_; ++j)
    if (mpz_class(static_cast<unsigned long>(dim(j))) != expected.at(j))
      throw consistency_error("build: degree dimension disagrees with the Moebius formula");

  // Relators vanish in the quotient.
  for (int t = 1; t <= n_; ++t)
    if (!reduce_free(relator(n_, t)).empty())
      throw consistency_error("build: Yang-Mills relator does not reduce to zero");

  // Jacobi identity over all basis triples that can interact under the
  // degree cutoff. Everything else is zero on degree grounds.
  for (std::size_t i = 0; i < labels_.size(); ++i)
    for (std::size_t k = i + 1; k < labels_.size(); ++k) {
      if (label_degree_[i] + label_degree_[k] >= l_) break;
      for (std::size_t m = k + 1; m < labels_.size(); ++m) {
        if (label_degree_[i] + label_degree_[k] + label_degree_[m] > l_) break;
        LieVec jac;
        LieVec km = bracket(k, m), mi = bracket(m, i), ik = bracket(i, k);
        for (const auto& [b, c] : km) lievec_add_scaled(jac, c, bracket(i, b));
        for (const auto& [b, c] : mi) lievec_add_scaled(jac, c, bracket(k, b));
        for (const auto& [b, c] : ik) lievec_add_scaled(jac, c, bracket(m, b));
        if (!jac.empty()) throw consistency_error("build: Jacobi identity failed");
      }
    }
}

std::size_t GradedNilpotentLie::dim(int degree) const {
  if (degree < 1 || degree > l_) return 0;
  std::size_t c = 0;
  for (int d : label_degree_)
    if (d == degree) ++c;
  return c;
}

std::vector<std::size_t> GradedNilpotentLie::dims() const {
  std::vector<std::size_t> out(l_);
  for (int d : label_degree_) ++out[d - 1];
  return out;
}

int GradedNilpotentLie::degree_of(std::size_t i) const { return label_degree_.at(i); }

const Word& GradedNilpotentLie::label_word(std::size_t i) const { return labels_.at(i); }

std::string GradedNilpotentLie::label_str(std::size_t i) const {
  return "x" + word_str(labels_.at(i));
}

std::optional<std::size_t> GradedNilpotentLie::index_of(const Word& w) const {
  auto it = label_index_.find(w);
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

LieVec GradedNilpotentLie::bracket(std::size_t i, std::size_t k) const {
  if (i == k) return {};
  if (label_degree_.at(i) + label_degree_.at(k) > l_) return {};
  if (i < k) {
    auto it = sc_.find({i, k});
    return it == sc_.end() ? LieVec{} : it->second;
  }
  auto it = sc_.find({k, i});
  LieVec out;
  if (it != sc_.end())
    for (const auto& [t, c] : it->second) out.emplace(t, -c);
  return out;
}

LieVec GradedNilpotentLie::bracket_vec(const LieVec& a, const LieVec& b) const {
  LieVec out;
  for (const auto& [i, ca] : a)
    for (const auto& [k, cb] : b) lievec_add_scaled(out, ca * cb, bracket(i, k));
  return out;
}

RatMatrix GradedNilpotentLie::ad_matrix(const LieVec& a) const {
  RatMatrix m(dim(), dim());
  for (std::size_t k = 0; k < dim(); ++k)
    for (const auto& [i, c] : a)
      for (const auto& [t, v] : bracket(i, k)) m.at(t, k) += c * v;
  return m;
}

LieVec GradedNilpotentLie::reduce(const BracketTree& expr) const {
  if (expr.leaf > 0) {
    if (expr.leaf > n_)
      throw std::invalid_argument("reduce: generator index exceeds n");
    return {{label_index_.at(Word{expr.leaf}), Rational(1)}};
  }
  if (expr.word_degree() > l_) return {};
  return bracket_vec(reduce(*expr.left), reduce(*expr.right));
}

LieVec GradedNilpotentLie::project(int degree, std::vector<Rational>& dense) const {
  const auto& dd = deg_[degree - 1];
  for (const auto& [p, rest] : dd.rows) {
    if (dense[p].is_zero()) continue;
    Rational c = dense[p];
    dense[p] = Rational(0);
    for (const auto& [pos, v] : rest) dense[pos] -= c * v;
  }
  LieVec out;
  for (std::size_t pos = 0; pos < dense.size(); ++pos) {
    if (dense[pos].is_zero()) continue;
    if (dd.label_of[pos] < 0)
      throw consistency_error("project: pivot coordinate survived reduction");
    out.emplace(static_cast<std::size_t>(dd.label_of[pos]), dense[pos]);
  }
  return out;
}

LieVec GradedNilpotentLie::reduce_free(const FreeLieElement& x) const {
  if (x.n != n_) throw std::invalid_argument("reduce_free: generator count mismatch");
  std::map<int, std::vector<Rational>> dense;
  for (const auto& [w, c] : x.terms) {
    int j = static_cast<int>(w.size());
    if (j > l_) continue;
    auto& v = dense[j];
    if (v.empty()) v.assign(deg_[j - 1].lyndon.size(), Rational(0));
    v[deg_[j - 1].windex.at(w)] = c;
  }
  LieVec out;
  for (auto& [j, v] : dense)
    for (const auto& [t, c] : project(j, v)) out.emplace(t, c);
  return out;
}

std::string GradedNilpotentLie::vec_str(const LieVec& v) const {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : v) {
    Rational a = c;
    if (first) {
      if (a.sign() < 0) { os << "-"; a = -a; }
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    if (a != Rational(1)) os << a.str() << "*";
    os << label_str(i);
    first = false;
  }
  return os.str();
}

std::vector<PaperBasisElement> paper_basis(const GradedNilpotentLie& g) {
  if (g.n() != 3)
    throw std::domain_error("paper_basis: only published for n = 3");
  if (g.cls() > 4)
    throw std::invalid_argument("paper_basis: published basis stops at degree 4");

  static const std::vector<std::vector<Word>> published = {
      {{1}, {2}, {3}},
      {{1, 2}, {1, 3}, {2, 3}},
      {{1, 1, 2}, {2, 2, 1}, {1, 1, 3}, {1, 2, 3}, {3, 1, 2}},
      {{1, 1, 1, 2}, {1, 2, 2, 1}, {1, 1, 1, 3}, {1, 1, 2, 3}, {2, 2, 2, 1},
       {2, 1, 1, 3}, {2, 3, 1, 2}, {3, 1, 1, 2}, {3, 2, 2, 1}, {3, 3, 1, 2}}};

  std::vector<PaperBasisElement> out;
  for (int j = 1; j <= g.cls(); ++j)
    for (const Word& w : published[j - 1]) {
      PaperBasisElement e;
      e.label = w;
      e.tree = nested_tree(w);
      e.coords = g.reduce(e.tree);
      out.push_back(std::move(e));
    }

  RatMatrix m(out.size(), g.dim());
  for (std::size_t r = 0; r < out.size(); ++r)
    for (const auto& [i, c] : out[r].coords) m.at(r, i) = c;
  if (out.size() != g.dim() || rank(m) != g.dim())
    throw consistency_error("paper_basis: published labels do not form a basis");
  return out;
}

std::vector<std::pair<std::string, bool>> paper_identities(const GradedNilpotentLie& g) {
  if (g.n() != 3)
    throw std::domain_error("paper_identities: only published for n = 3");

  // Each identity is a vanishing combination; name, label words, rational
  // coefficients.
  struct Ident {
    std::string name;
    int degree;
    std::vector<std::pair<Word, Rational>> combo;
  };
  const std::vector<Ident> idents = {
      {"x332 = -x112", 3, {{{3, 3, 2}, Rational(1)}, {{1, 1, 2}, Rational(1)}}},
      {"x213 = x123 + x312", 3,
       {{{2, 1, 3}, Rational(1)}, {{1, 2, 3}, Rational(-1)}, {{3, 1, 2}, Rational(-1)}}},
      {"x3113 = x1221", 4,
       {{{3, 1, 1, 3}, Rational(1)}, {{1, 2, 2, 1}, Rational(-1)}}},
      {"x2112 = -x1221", 4,
       {{{2, 1, 1, 2}, Rational(1)}, {{1, 2, 2, 1}, Rational(1)}}},
      {"x2123 = x3221 + x2312 - x1113", 4,
       {{{2, 1, 2, 3}, Rational(1)}, {{3, 2, 2, 1}, Rational(-1)},
        {{2, 3, 1, 2}, Rational(-1)}, {{1, 1, 1, 3}, Rational(1)}}},
      {"x1312 = (x3112 + x2113 - x1123)/2", 4,
       {{{1, 3, 1, 2}, Rational(2)}, {{3, 1, 1, 2}, Rational(-1)},
        {{2, 1, 1, 3}, Rational(-1)}, {{1, 1, 2, 3}, Rational(1)}}},
      {"x3123 = (x1112 + x2221 - x3312)/2", 4,
       {{{3, 1, 2, 3}, Rational(2)}, {{1, 1, 1, 2}, Rational(-1)},
        {{2, 2, 2, 1}, Rational(-1)}, {{3, 3, 1, 2}, Rational(1)}}},
  };

  std::vector<std::pair<std::string, bool>> out;
  for (const Ident& id : idents) {
    if (id.degree > g.cls()) continue;
    LieVec acc;
    for (const auto& [w, c] : id.combo)
      lievec_add_scaled(acc, c, g.reduce(nested_tree(w)));
    out.emplace_back(id.name, acc.empty());
  }
  return out;
}

CharacterRep character_rep(int n, const std::vector<Rational>& lambda) {
  if (static_cast<int>(lambda.size()) != n)
    throw std::invalid_argument("character_rep: need one scalar per generator");
  return CharacterRep{n, lambda};
}

Rational character_value(const GradedNilpotentLie& g, const CharacterRep& rep, const LieVec& v) {
  if (rep.n != g.n()) throw std::invalid_argument("character_value: generator count mismatch");
  Rational acc;
  for (const auto& [i, c] : v)
    if (g.degree_of(i) == 1) acc += c * rep.lambda[g.label_word(i)[0] - 1];
  return acc;
}

bool character_hom_check(const GradedNilpotentLie& g, const CharacterRep& rep) {
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t k = i + 1; k < g.dim(); ++k)
      if (!character_value(g, rep, g.bracket(i, k)).is_zero()) return false;
  return true;
}

PbwMonomialTable pbw_monomials(const GradedNilpotentLie& g, int D) {
  if (D < 0) throw std::invalid_argument("pbw_monomials: negative degree");
  if (D > degree_cap(10))
    throw std::invalid_argument("pbw_monomials: degree exceeds the cap");

  PbwMonomialTable t;
  t.D = D;
  t.monomials.resize(D + 1);

  // Depth-first over basis indices with a degree budget; exponents of the
  // earliest variable vary slowest, which is exactly lex order within each
  // degree.
  std::vector<int> cur(g.dim(), 0);
  auto rec = [&](auto&& self, std::size_t idx, int remaining) -> void {
    if (idx == g.dim()) {
      t.monomials[D - remaining].push_back(cur);
      return;
    }
    int d = g.degree_of(idx);
    for (int e = 0; e * d <= remaining; ++e) {
      cur[idx] = e;
      self(self, idx + 1, remaining - e * d);
    }
    cur[idx] = 0;
  };
  rec(rec, 0, D);

  for (int d = 0; d <= D; ++d)
    t.counts.push_back(mpz_class(static_cast<unsigned long>(t.monomials[d].size())));

  // The counts must reproduce the product formula for the enveloping
  // algebra of a graded Lie algebra.
  TruncatedSeries expect = series_one(D);
  auto dims = g.dims();
  for (int j = 1; j <= g.cls(); ++j)
    expect = series_mul(expect,
                        geometric_power(j, mpz_class(static_cast<unsigned long>(dims[j - 1])), D));
  for (int d = 0; d <= D; ++d)
    if (t.counts[d] != expect[d])
      throw consistency_error("pbw_monomials: counts disagree with the product formula");
  return t;
}

PbwElement derivation_di(const GradedNilpotentLie& g, int i, const PbwElement& u) {
  if (i < 1 || i > g.n()) throw std::invalid_argument("derivation_di: index out of range");
  PbwElement out;
  for (const auto& [m, c] : u) {
    if (m.size() != g.dim())
      throw std::invalid_argument("derivation_di: exponent vector length mismatch");
    // Generators come first in the canonical basis (degree-1 labels are the
    // single letters in order), so x_i sits at slot i-1.
    int a = m[i - 1];
    if (a == 0) continue;
    std::vector<int> m2 = m;
    --m2[i - 1];
    Rational s = out[m2] += c * Rational(a);
    if (s.is_zero()) out.erase(m2);
  }
  return out;
}

std::vector<std::size_t> kernel_intersection_dims(const GradedNilpotentLie& g, int D) {
  if (D < 0) throw std::invalid_argument("kernel_intersection_dims: negative degree");
  if (g.cls() < D)
    throw std::invalid_argument("kernel_intersection_dims: quotient truncates below D (need l >= D)");

  PbwMonomialTable t = pbw_monomials(g, D);
  std::vector<std::size_t> out(D + 1);
  out[0] = t.monomials[0].size(); // the empty monomial; no constraints at degree 0
  for (int d = 1; d <= D; ++d) {
    const auto& cols = t.monomials[d];
    const auto& prev = t.monomials[d - 1];
    std::map<std::vector<int>, std::size_t> pidx;
    for (std::size_t k = 0; k < prev.size(); ++k) pidx.emplace(prev[k], k);

    // Stacked matrix of (d_1, ..., d_n) : U_d -> U_{d-1}^n. Each derivation
    // sends a monomial to a single monomial, so columns have at most n
    // entries.
    RatMatrix m(g.n() * prev.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (int i = 1; i <= g.n(); ++i) {
        int a = cols[c][i - 1];
        if (a == 0) continue;
        std::vector<int> m2 = cols[c];
        --m2[i - 1];
        m.at((i - 1) * prev.size() + pidx.at(m2), c) = Rational(a);
      }
    out[d] = cols.size() - rank(m);
  }
  return out;
}

std::size_t lower_central_dim(const GradedNilpotentLie& g, int k) {
  if (k < 0) throw std::invalid_argument("lower_central_dim: negative index");

  std::vector<LieVec> current;
  for (std::size_t i = 0; i < g.dim(); ++i) current.push_back({{i, Rational(1)}});

  for (int step = 0; step < k; ++step) {
    IncrementalSpan span(g.dim());
    std::vector<LieVec> next;
    for (std::size_t a = 0; a < g.dim(); ++a)
      for (const LieVec& v : current) {
        LieVec b;
        for (const auto& [i, c] : v) lievec_add_scaled(b, c, g.bracket(a, i));
        if (b.empty()) continue;
        std::vector<Rational> dense(g.dim());
        for (const auto& [i, c] : b) dense[i] = c;
        if (span.insert(std::move(dense))) next.push_back(std::move(b));
      }
    current = std::move(next);
  }

  if (k == 0) return g.dim();
  std::vector<std::vector<Rational>> dense;
  for (const LieVec& v : current) {
    std::vector<Rational> row(g.dim());
    for (const auto& [i, c] : v) row[i] = c;
    dense.push_back(std::move(row));
  }
  return span_dim(dense);
}

} // namespace ymcas
