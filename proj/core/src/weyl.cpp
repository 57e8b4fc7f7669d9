#include "ymcas/weyl.hpp"

#include "ymcas/errors.hpp"
#include "ymcas/matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace ymcas {

namespace {

int vec_sum(const std::vector<int>& v) {
  int s = 0;
  for (int x : v) s += x;
  return s;
}

Rational binom(unsigned long n, unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

Rational factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

void add_term(WeylElement& w, const WeylElement::Key& key, const Rational& c) {
  if (c.is_zero()) return;
  auto it = w.terms.find(key);
  if (it == w.terms.end()) {
    w.terms.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) w.terms.erase(it);
  }
}

void check_compatible(const WeylElement& a, const WeylElement& b, const char* who) {
  if (a.r != b.r)
    throw std::invalid_argument(std::string(who) + ": mixed variable counts");
}

/// All exponent vectors over r slots with total degree <= D, degree by degree
/// and lexicographically ascending within a degree.
std::vector<std::vector<int>> graded_monomials(int r, int D) {
  std::vector<std::vector<int>> out;
  if (r < 0 || D < 0) throw std::invalid_argument("graded_monomials: negative shape");
  if (r == 0) {
    out.push_back({});
    return out;
  }
  std::vector<int> cur(static_cast<std::size_t>(r), 0);
  for (int d = 0; d <= D; ++d) {
    // Fill slot by slot; the final slot takes the remainder, which yields
    // lexicographic order on the full vectors.
    auto rec = [&](auto&& self, int pos, int rem) -> void {
      if (pos == r - 1) {
        cur[static_cast<std::size_t>(pos)] = rem;
        out.push_back(cur);
        return;
      }
      for (int e = 0; e <= rem; ++e) {
        cur[static_cast<std::size_t>(pos)] = e;
        self(self, pos + 1, rem - e);
      }
    };
    rec(rec, 0, d);
  }
  return out;
}

std::string monomial_str(const std::vector<int>& alpha) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (i) os << ",";
    os << alpha[i];
  }
  os << ")";
  return os.str();
}

} // namespace

int WeylElement::q_degree() const {
  int best = -1;
  for (const auto& [key, c] : terms) best = std::max(best, vec_sum(key.first));
  return best;
}

int WeylElement::p_order() const {
  int best = -1;
  for (const auto& [key, c] : terms) best = std::max(best, vec_sum(key.second));
  return best;
}

std::string WeylElement::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms) {
    const bool neg = c.sign() < 0;
    const Rational mag = neg ? -c : c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    std::ostringstream fac;
    for (std::size_t i = 0; i < key.first.size(); ++i) {
      if (key.first[i] == 0) continue;
      fac << (fac.tellp() > 0 ? " " : "") << "q" << (i + 1);
      if (key.first[i] > 1) fac << "^" << key.first[i];
    }
    for (std::size_t i = 0; i < key.second.size(); ++i) {
      if (key.second[i] == 0) continue;
      fac << (fac.tellp() > 0 ? " " : "") << "p" << (i + 1);
      if (key.second[i] > 1) fac << "^" << key.second[i];
    }
    const std::string f = fac.str();
    if (f.empty()) {
      os << mag.str();
    } else if (mag == Rational(1)) {
      os << f;
    } else {
      os << mag.str() << " " << f;
    }
  }
  return os.str();
}

WeylElement weyl_zero(int r) {
  if (r < 0) throw std::invalid_argument("weyl_zero: negative rank");
  WeylElement w;
  w.r = r;
  return w;
}

WeylElement weyl_one(int r) {
  WeylElement w = weyl_zero(r);
  w.terms.emplace(WeylElement::Key{std::vector<int>(static_cast<std::size_t>(r), 0),
                                   std::vector<int>(static_cast<std::size_t>(r), 0)},
                  Rational(1));
  return w;
}

WeylElement weyl_q(int r, int i) {
  if (i < 1 || i > r) throw std::invalid_argument("weyl_q: index out of range");
  WeylElement w = weyl_zero(r);
  std::vector<int> a(static_cast<std::size_t>(r), 0), b(static_cast<std::size_t>(r), 0);
  a[static_cast<std::size_t>(i - 1)] = 1;
  w.terms.emplace(WeylElement::Key{a, b}, Rational(1));
  return w;
}

WeylElement weyl_p(int r, int i) {
  if (i < 1 || i > r) throw std::invalid_argument("weyl_p: index out of range");
  WeylElement w = weyl_zero(r);
  std::vector<int> a(static_cast<std::size_t>(r), 0), b(static_cast<std::size_t>(r), 0);
  b[static_cast<std::size_t>(i - 1)] = 1;
  w.terms.emplace(WeylElement::Key{a, b}, Rational(1));
  return w;
}

WeylElement weyl_add(const WeylElement& a, const WeylElement& b) {
  check_compatible(a, b, "weyl_add");
  WeylElement out = a;
  for (const auto& [key, c] : b.terms) add_term(out, key, c);
  return out;
}

WeylElement weyl_scale(const Rational& c, const WeylElement& a) {
  WeylElement out = weyl_zero(a.r);
  if (c.is_zero()) return out;
  for (const auto& [key, v] : a.terms) out.terms.emplace(key, c * v);
  return out;
}

WeylElement weyl_mul(const WeylElement& a, const WeylElement& b) {
  check_compatible(a, b, "weyl_mul");
  const std::size_t r = static_cast<std::size_t>(a.r);
  WeylElement out = weyl_zero(a.r);
  for (const auto& [ka, ca] : a.terms) {
    for (const auto& [kb, cb] : b.terms) {
      // q^al p^be * q^ga p^de: straighten p^be q^ga variable by variable.
      // Partial products accumulate the contraction vector k.
      std::vector<std::pair<std::vector<int>, Rational>> partial;
      partial.emplace_back(std::vector<int>(), ca * cb);
      for (std::size_t i = 0; i < r; ++i) {
        const int be = ka.second[i], ga = kb.first[i];
        const int kmax = std::min(be, ga);
        std::vector<std::pair<std::vector<int>, Rational>> next;
        for (const auto& [kv, c] : partial) {
          for (int k = 0; k <= kmax; ++k) {
            const Rational w = binom(static_cast<unsigned long>(be),
                                     static_cast<unsigned long>(k)) *
                               binom(static_cast<unsigned long>(ga),
                                     static_cast<unsigned long>(k)) *
                               factorial(static_cast<unsigned long>(k));
            std::vector<int> kv2 = kv;
            kv2.push_back(k);
            next.emplace_back(std::move(kv2), c * w);
          }
        }
        partial = std::move(next);
      }
      for (const auto& [kv, c] : partial) {
        std::vector<int> qa(r), pb(r);
        for (std::size_t i = 0; i < r; ++i) {
          qa[i] = ka.first[i] + kb.first[i] - kv[i];
          pb[i] = ka.second[i] + kb.second[i] - kv[i];
        }
        add_term(out, WeylElement::Key{std::move(qa), std::move(pb)}, c);
      }
    }
  }
  return out;
}

WeylElement weyl_comm(const WeylElement& a, const WeylElement& b) {
  return weyl_add(weyl_mul(a, b), weyl_scale(Rational(-1), weyl_mul(b, a)));
}

std::map<std::vector<int>, Rational> weyl_apply(const WeylElement& w,
                                                const std::vector<int>& beta) {
  if (beta.size() != static_cast<std::size_t>(w.r))
    throw std::invalid_argument("weyl_apply: monomial length mismatch");
  std::map<std::vector<int>, Rational> out;
  for (const auto& [key, c] : w.terms) {
    Rational factor = c;
    std::vector<int> target(beta.size());
    bool kill = false;
    for (std::size_t i = 0; i < beta.size(); ++i) {
      const int d = key.second[i];
      if (d > beta[i]) { kill = true; break; }
      // d/dq^d on q^b gives b!/(b-d)! q^{b-d}.
      for (int t = 0; t < d; ++t) factor *= Rational(beta[i] - t);
      target[i] = beta[i] - d + key.first[i];
    }
    if (kill || factor.is_zero()) continue;
    auto it = out.find(target);
    if (it == out.end()) {
      out.emplace(std::move(target), factor);
    } else {
      it->second += factor;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

InducedRep induced_rep(const GradedNilpotentLie& g, const Functional& f,
                       const Subspace& h, int D) {
  const std::size_t dim = g.dim();
  if (f.dual.size() != dim)
    throw std::invalid_argument("induced_rep: functional length mismatch");
  if (D < 1) throw std::invalid_argument("induced_rep: truncation must be positive");
  if (!is_polarization(g, f, h))
    throw std::invalid_argument("induced_rep: h is not a polarization for f");

  InducedRep rep;
  rep.basis.D = D;

  // Complement: canonical basis elements outside h, greedily in basis order
  // (the canonical order already ascends by degree).
  IncrementalSpan span(dim);
  for (const auto& row : h.basis)
    if (!span.insert(row))
      throw std::invalid_argument("induced_rep: polarization basis is dependent");
  for (std::size_t idx = 0; idx < dim; ++idx) {
    std::vector<Rational> unit(dim);
    unit[idx] = Rational(1);
    if (span.insert(std::move(unit))) rep.basis.complement.push_back(idx);
  }
  const std::size_t r = rep.basis.complement.size();
  if (r + h.dim() != dim)
    throw consistency_error("induced_rep: complement size mismatch");

  // Adapted basis: complement units first, then the rows of h. Change of
  // coordinates is one inverse, reused for every bracket below.
  RatMatrix A(dim, dim);
  for (std::size_t t = 0; t < r; ++t) A.at(rep.basis.complement[t], t) = Rational(1);
  for (std::size_t t = 0; t < h.dim(); ++t)
    for (std::size_t i = 0; i < dim; ++i) A.at(i, r + t) = h.basis[t][i];
  const RatMatrix Ainv = inverse(A);
  auto to_adapted = [&](const std::vector<Rational>& v) {
    std::vector<Rational> out(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      Rational s;
      for (std::size_t j = 0; j < dim; ++j)
        if (!v[j].is_zero() && !Ainv.at(i, j).is_zero()) s += Ainv.at(i, j) * v[j];
      out[i] = s;
    }
    return out;
  };

  std::vector<LieVec> adapted(dim);
  for (std::size_t t = 0; t < r; ++t) adapted[t] = {{rep.basis.complement[t], Rational(1)}};
  for (std::size_t t = 0; t < h.dim(); ++t) {
    LieVec v;
    for (std::size_t i = 0; i < dim; ++i)
      if (!h.basis[t][i].is_zero()) v.emplace(i, h.basis[t][i]);
    adapted[r + t] = std::move(v);
  }

  // f-values of the h part; the induced character is f itself because the
  // trace twist vanishes for nilpotent adjoints, which we assert.
  std::vector<Rational> fval(dim);
  for (std::size_t t = r; t < dim; ++t) {
    fval[t] = f.value(adapted[t]);
    const RatMatrix ad = g.ad_matrix(adapted[t]);
    Rational tr;
    for (std::size_t i = 0; i < dim; ++i) tr += ad.at(i, i);
    if (!tr.is_zero())
      throw consistency_error("induced_rep: adjoint trace twist does not vanish");
  }

  // Brackets of adapted pairs, in adapted coordinates.
  std::vector<std::vector<std::vector<std::pair<std::size_t, Rational>>>> brk(dim);
  for (std::size_t a = 1; a < dim; ++a) {
    brk[a].resize(a);
    for (std::size_t b = 0; b < a; ++b) {
      const LieVec w = g.bracket_vec(adapted[a], adapted[b]);
      if (w.empty()) continue;
      std::vector<Rational> dense(dim);
      for (const auto& [i, c] : w) dense[i] = c;
      const std::vector<Rational> ad = to_adapted(dense);
      for (std::size_t t = 0; t < dim; ++t)
        if (!ad[t].is_zero()) brk[a][b].emplace_back(t, ad[t]);
    }
  }

  rep.basis.monomials = graded_monomials(static_cast<int>(r), D);
  for (std::size_t k = 0; k < rep.basis.monomials.size(); ++k)
    rep.basis.index.emplace(rep.basis.monomials[k], k);

  // Straightening. Words are adapted indices; sorted means complement
  // letters first (they are the small indices), then h letters, which act
  // on the vacuum through f.
  long long steps = 0;
  auto act = [&](std::size_t a, const std::vector<int>& alpha) {
    std::map<std::size_t, Rational> col;
    std::vector<std::pair<Rational, std::vector<std::size_t>>> stack;
    for (std::size_t t = 0; t < dim; ++t) {
      const Rational& c = Ainv.at(t, a);
      if (c.is_zero()) continue;
      std::vector<std::size_t> word;
      word.push_back(t);
      for (std::size_t i = 0; i < r; ++i)
        for (int k = 0; k < alpha[i]; ++k) word.push_back(i);
      stack.emplace_back(c, std::move(word));
    }
    while (!stack.empty()) {
      if (++steps > 100'000'000)
        throw consistency_error("induced_rep: straightening step bound exceeded");
      auto [coeff, word] = std::move(stack.back());
      stack.pop_back();
      std::size_t pos = word.size();
      for (std::size_t i = 0; i + 1 < word.size(); ++i)
        if (word[i] > word[i + 1]) { pos = i; break; }
      if (pos == word.size()) {
        Rational val = coeff;
        std::vector<int> gamma(r, 0);
        bool killed = false;
        for (std::size_t t : word) {
          if (t < r) {
            ++gamma[t];
          } else {
            val *= fval[t];
            if (val.is_zero()) { killed = true; break; }
          }
        }
        if (killed) continue;
        int deg = 0;
        for (int e : gamma) deg += e;
        if (deg > D) continue;
        auto idx = rep.basis.index.find(gamma);
        const std::size_t m = idx->second;
        auto it = col.find(m);
        if (it == col.end()) {
          col.emplace(m, val);
        } else {
          it->second += val;
          if (it->second.is_zero()) col.erase(it);
        }
        continue;
      }
      const std::size_t x = word[pos], y = word[pos + 1];
      std::vector<std::size_t> swapped = word;
      std::swap(swapped[pos], swapped[pos + 1]);
      stack.emplace_back(coeff, std::move(swapped));
      for (const auto& [t, c] : brk[x][y]) {
        std::vector<std::size_t> shorter;
        shorter.reserve(word.size() - 1);
        shorter.insert(shorter.end(), word.begin(), word.begin() + static_cast<std::ptrdiff_t>(pos));
        shorter.push_back(t);
        shorter.insert(shorter.end(), word.begin() + static_cast<std::ptrdiff_t>(pos) + 2, word.end());
        stack.emplace_back(coeff * c, std::move(shorter));
      }
    }
    return col;
  };

  rep.actions.resize(dim);
  for (std::size_t a = 0; a < dim; ++a) {
    ActionMatrix mat(rep.basis.monomials.size());
    for (std::size_t k = 0; k < rep.basis.monomials.size(); ++k)
      mat[k] = act(a, rep.basis.monomials[k]);
    rep.actions[a] = std::move(mat);
  }
  return rep;
}

std::map<std::size_t, WeylElement> extract_weyl(const GradedNilpotentLie& g,
                                                const InducedRep& rep) {
  const std::size_t dim = g.dim();
  if (rep.actions.size() != dim)
    throw std::invalid_argument("extract_weyl: action count mismatch");
  const int r = static_cast<int>(rep.basis.complement.size());
  const int D = rep.basis.D;

  // W acting on q^beta, truncated to the module's degree window.
  auto truncated_apply = [&](const WeylElement& w, const std::vector<int>& beta) {
    std::map<std::size_t, Rational> out;
    for (const auto& [mon, c] : weyl_apply(w, beta)) {
      if (vec_sum(mon) > D) continue;
      out.emplace(rep.basis.index.at(mon), c);
    }
    return out;
  };

  std::map<std::size_t, WeylElement> images;
  for (std::size_t a = 0; a < dim; ++a) {
    WeylElement w = weyl_zero(r);
    // Interpolate on |beta| < D. Coefficients at p-exponent beta only
    // influence columns beta' >= beta componentwise, so scanning in graded
    // order leaves, at each column, exactly the terms with that p-exponent:
    // residual = sum_gamma c_{gamma beta} beta! q^gamma.
    for (std::size_t k = 0; k < rep.basis.monomials.size(); ++k) {
      const std::vector<int>& beta = rep.basis.monomials[k];
      if (vec_sum(beta) >= D) continue;
      std::map<std::size_t, Rational> residual = rep.actions[a][k];
      for (const auto& [m, c] : truncated_apply(w, beta)) {
        auto it = residual.find(m);
        if (it == residual.end()) {
          residual.emplace(m, -c);
        } else {
          it->second -= c;
          if (it->second.is_zero()) residual.erase(it);
        }
      }
      Rational bf(1);
      for (int e : beta) bf *= factorial(static_cast<unsigned long>(e));
      for (const auto& [m, c] : residual)
        w.terms.emplace(WeylElement::Key{rep.basis.monomials[m], beta}, c / bf);
    }
    // Held-out check on every column, in particular |beta| = D.
    for (std::size_t k = 0; k < rep.basis.monomials.size(); ++k) {
      if (truncated_apply(w, rep.basis.monomials[k]) != rep.actions[a][k])
        throw consistency_error(
            "extract_weyl: truncation too small for " + g.label_str(a) +
            " at monomial " + monomial_str(rep.basis.monomials[k]));
    }
    images.emplace(a, std::move(w));
  }
  return images;
}

namespace {

/// Reduced span of Weyl elements with expression tracking, used by the
/// surjectivity search. Rows stay normalized at their maximal term.
struct WeylSpan {
  using Expr = std::map<std::vector<std::size_t>, Rational>;
  struct Entry {
    WeylElement elem;
    Expr expr;
  };

  std::map<WeylElement::Key, Entry, std::greater<WeylElement::Key>> rows;

  // Subtract multiples of the rows from w (largest lead first); each
  // subtraction only touches keys below the lead, so one pass suffices.
  void reduce(WeylElement& w, Expr& acc) const {
    for (const auto& [lead, ent] : rows) {
      auto it = w.terms.find(lead);
      if (it == w.terms.end()) continue;
      const Rational c = it->second;
      w = weyl_add(w, weyl_scale(-c, ent.elem));
      for (const auto& [word, co] : ent.expr) {
        auto e = acc.find(word);
        if (e == acc.end()) {
          acc.emplace(word, c * co);
        } else {
          e->second += c * co;
          if (e->second.is_zero()) acc.erase(e);
        }
      }
    }
  }

  // Insert elem (with its expressing combination); returns the new lead
  // when the span grew.
  std::optional<WeylElement::Key> insert(WeylElement elem, Expr expr) {
    Expr used;
    reduce(elem, used);
    if (elem.is_zero()) return std::nullopt;
    for (const auto& [word, co] : used) {
      auto e = expr.find(word);
      if (e == expr.end()) {
        expr.emplace(word, -co);
      } else {
        e->second -= co;
        if (e->second.is_zero()) expr.erase(e);
      }
    }
    const WeylElement::Key lead = elem.terms.rbegin()->first;
    const Rational inv = Rational(1) / elem.terms.rbegin()->second;
    elem = weyl_scale(inv, elem);
    Expr scaled;
    for (const auto& [word, co] : expr) scaled.emplace(word, inv * co);
    auto [it, fresh] = rows.emplace(lead, Entry{std::move(elem), std::move(scaled)});
    if (!fresh) throw consistency_error("surjectivity_check: duplicate lead");
    return lead;
  }

  std::optional<Expr> express(const WeylElement& target) const {
    WeylElement w = target;
    Expr acc;
    reduce(w, acc);
    if (!w.is_zero()) return std::nullopt;
    return acc;
  }
};

} // namespace

SurjectivityResult surjectivity_check(const std::vector<WeylElement>& images, int L) {
  if (images.empty()) throw std::invalid_argument("surjectivity_check: no images");
  const int r = images[0].r;
  for (const WeylElement& w : images)
    if (w.r != r) throw std::invalid_argument("surjectivity_check: mixed ranks");
  if (L < 0) throw std::invalid_argument("surjectivity_check: negative depth");

  std::vector<std::pair<std::string, WeylElement>> targets;
  for (int i = 1; i <= r; ++i) {
    targets.emplace_back("p" + std::to_string(i), weyl_p(r, i));
    targets.emplace_back("q" + std::to_string(i), weyl_q(r, i));
  }

  SurjectivityResult res;
  WeylSpan span;
  span.insert(weyl_one(r), {{{}, Rational(1)}});

  auto try_targets = [&](int depth) {
    std::map<std::string, std::vector<WitnessTerm>> wit;
    for (const auto& [name, t] : targets) {
      auto expr = span.express(t);
      if (!expr) return false;
      std::vector<WitnessTerm> terms;
      WeylElement check = weyl_zero(r);
      for (const auto& [word, co] : *expr) {
        WeylElement prod = weyl_one(r);
        for (std::size_t idx : word) prod = weyl_mul(prod, images[idx]);
        check = weyl_add(check, weyl_scale(co, prod));
        terms.push_back(WitnessTerm{co, word});
      }
      if (!(weyl_add(check, weyl_scale(Rational(-1), t)).is_zero()))
        throw consistency_error("surjectivity_check: witness fails to evaluate");
      wit.emplace(name, std::move(terms));
    }
    res.surjective = true;
    res.depth = depth;
    res.witnesses = std::move(wit);
    return true;
  };

  if (targets.empty()) {
    res.surjective = true;
    return res;
  }

  std::vector<WeylElement::Key> frontier{span.rows.begin()->first};
  for (int depth = 1; depth <= L && !res.surjective; ++depth) {
    std::vector<WeylElement::Key> next;
    for (const WeylElement::Key& lead : frontier) {
      const WeylSpan::Entry base = span.rows.at(lead); // copy: map grows below
      for (std::size_t j = 0; j < images.size(); ++j) {
        WeylElement prod = weyl_mul(base.elem, images[j]);
        WeylSpan::Expr expr;
        for (const auto& [word, co] : base.expr) {
          std::vector<std::size_t> w2 = word;
          w2.push_back(j);
          expr.emplace(std::move(w2), co);
        }
        if (auto added = span.insert(std::move(prod), std::move(expr)))
          next.push_back(*added);
      }
    }
    frontier = std::move(next);
    if (try_targets(depth)) break;
    if (frontier.empty()) break; // span closed under multiplication: no progress
  }
  return res;
}

WeylMapReport ym_weyl_map(const GradedNilpotentLie& g, const Functional& f,
                          int surj_depth) {
  WeylMapReport rep;
  rep.n = g.n();
  rep.l = g.cls();
  rep.polarization = standard_polarization(g, f);
  const InducedRep ind =
      induced_rep(g, f, rep.polarization.polarization, g.cls() + 2);
  std::map<std::size_t, WeylElement> imgs = extract_weyl(g, ind);

  const std::size_t dim = g.dim();
  rep.labels.reserve(dim);
  rep.images.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    rep.labels.push_back(g.label_str(i));
    rep.images.push_back(std::move(imgs.at(i)));
  }

  const int n = g.n();
  const int r = static_cast<int>(rep.polarization.weight);
  rep.relator_check = true;
  for (int j = 0; j < n && rep.relator_check; ++j) {
    WeylElement sum = weyl_zero(r);
    for (int i = 0; i < n; ++i)
      sum = weyl_add(sum, weyl_comm(rep.images[static_cast<std::size_t>(i)],
                                    weyl_comm(rep.images[static_cast<std::size_t>(i)],
                                              rep.images[static_cast<std::size_t>(j)])));
    if (!sum.is_zero()) rep.relator_check = false;
  }

  rep.lie_hom_check = true;
  for (std::size_t a = 0; a < dim && rep.lie_hom_check; ++a)
    for (std::size_t b = a + 1; b < dim; ++b) {
      WeylElement lhs = weyl_comm(rep.images[a], rep.images[b]);
      for (const auto& [t, c] : g.bracket(a, b))
        lhs = weyl_add(lhs, weyl_scale(-c, rep.images[t]));
      if (!lhs.is_zero()) { rep.lie_hom_check = false; break; }
    }

  rep.surjectivity = surjectivity_check(rep.images, surj_depth);
  return rep;
}

WeylMapReport ym_weyl_map(int n, int l, const std::map<std::string, std::string>& coords,
                          int surj_depth) {
  const GradedNilpotentLie g = GradedNilpotentLie::build(n, l);
  const Functional f = functional_from_labels(g, coords);
  return ym_weyl_map(g, f, surj_depth);
}

PullbackModule pullback_module(const WeylMapReport& report, int D) {
  if (D < 0) throw std::invalid_argument("pullback_module: negative degree");
  if (!report.relator_check)
    throw std::invalid_argument("pullback_module: relator check did not pass");
  if (report.images.empty())
    throw std::invalid_argument("pullback_module: empty report");
  const int r = report.images[0].r;
  const int n = report.n;

  PullbackModule mod;
  mod.D = D;
  mod.monomials = graded_monomials(r, D);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t k = 0; k < mod.monomials.size(); ++k)
    index.emplace(mod.monomials[k], k);

  const std::size_t count = mod.monomials.size();
  int qmax = 0;
  for (int i = 0; i < n; ++i)
    qmax = std::max(qmax, report.images[static_cast<std::size_t>(i)].q_degree());

  mod.action.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    RatMatrix M(count, count);
    for (std::size_t k = 0; k < count; ++k)
      for (const auto& [mon, c] :
           weyl_apply(report.images[static_cast<std::size_t>(i)], mod.monomials[k]))
        if (vec_sum(mon) <= D) M.at(index.at(mon), k) = c;
    mod.action.push_back(std::move(M));
  }

  // Relator images vanish on inputs whose whole composition chain stays
  // inside the truncation: two inner applications each raise degree by at
  // most qmax, and the final truncation of an exact zero is zero.
  auto apply = [&](const RatMatrix& M, const std::vector<Rational>& v) {
    std::vector<Rational> out(count);
    for (std::size_t j = 0; j < count; ++j) {
      if (v[j].is_zero()) continue;
      for (std::size_t i = 0; i < count; ++i)
        if (!M.at(i, j).is_zero()) out[i] += M.at(i, j) * v[j];
    }
    return out;
  };
  mod.relator_annihilation = true;
  const int safe = D - 2 * qmax;
  for (std::size_t k = 0; k < count && mod.relator_annihilation; ++k) {
    if (vec_sum(mod.monomials[k]) > safe) continue;
    std::vector<Rational> unit(count);
    unit[k] = Rational(1);
    for (int j = 0; j < n && mod.relator_annihilation; ++j) {
      std::vector<Rational> total(count);
      for (int i = 0; i < n; ++i) {
        const RatMatrix& Mi = mod.action[static_cast<std::size_t>(i)];
        const RatMatrix& Mj = mod.action[static_cast<std::size_t>(j)];
        std::vector<Rational> t1 = apply(Mi, apply(Mi, apply(Mj, unit)));
        std::vector<Rational> t2 = apply(Mi, apply(Mj, apply(Mi, unit)));
        std::vector<Rational> t3 = apply(Mj, apply(Mi, apply(Mi, unit)));
        for (std::size_t s = 0; s < count; ++s)
          total[s] += t1[s] - Rational(2) * t2[s] + t3[s];
      }
      for (const Rational& x : total)
        if (!x.is_zero()) { mod.relator_annihilation = false; break; }
    }
  }
  return mod;
}

std::vector<SeparationCandidate> default_candidates() {
  std::vector<SeparationCandidate> out;
  out.push_back({2, {{"x13", "1"}, {"x23", "1"}}});
  out.push_back({3, {{"x112", "1"}}});
  out.push_back({3, {{"x112", "1"}, {"x123", "1"}}});
  // Weight-4 functional supported on the whole degree-3 and degree-4 dual
  // basis (published coordinates); unlike the single-coordinate weight-4
  // example, its map keeps every canonical basis element nonzero.
  out.push_back({4,
                 {{"x312", "1"},
                  {"x2312", "1"},
                  {"x1112", "1"},
                  {"x221", "1"},
                  {"x113", "1"},
                  {"x1221", "1"},
                  {"x1113", "1"},
                  {"x1123", "1"},
                  {"x2221", "1"},
                  {"x2113", "1"},
                  {"x3112", "1"},
                  {"x3221", "1"},
                  {"x3312", "1"}}});
  return out;
}

SeparationReport separation_probe(int n, int d,
                                  const std::vector<SeparationCandidate>& candidates) {
  if (n != 3)
    throw std::invalid_argument("separation_probe: published scope is n = 3");
  if (d < 0 || d > 4)
    throw std::invalid_argument("separation_probe: degree must be between 0 and 4");

  const GradedNilpotentLie g = GradedNilpotentLie::build(3, std::max(d, 1));
  const PbwMonomialTable table = pbw_monomials(g, d);

  // One map per candidate, keyed by canonical label word so monomial factors
  // can be looked up across different cutoffs.
  struct Prepared {
    int l;
    int r;
    std::map<Word, WeylElement> by_word;
  };
  std::vector<Prepared> maps;
  for (const SeparationCandidate& cand : candidates) {
    const GradedNilpotentLie gc = GradedNilpotentLie::build(3, cand.l);
    const Functional f = functional_from_labels(gc, cand.coords);
    const PolarizationReport pol = standard_polarization(gc, f);
    const InducedRep ind = induced_rep(gc, f, pol.polarization, gc.cls() + 2);
    std::map<std::size_t, WeylElement> imgs = extract_weyl(gc, ind);
    Prepared p;
    p.l = cand.l;
    p.r = static_cast<int>(pol.weight);
    for (auto& [i, w] : imgs) p.by_word.emplace(gc.label_word(i), std::move(w));
    maps.push_back(std::move(p));
  }

  SeparationReport report;
  report.all_separated = true;
  for (int deg = 0; deg <= d; ++deg) {
    for (const std::vector<int>& alpha : table.monomials[static_cast<std::size_t>(deg)]) {
      SeparationEntry entry;
      entry.exponents = alpha;
      entry.degree = deg;
      for (std::size_t k = 0; k < maps.size() && !entry.separated; ++k) {
        const Prepared& p = maps[k];
        WeylElement prod = weyl_one(p.r);
        bool feasible = true;
        for (std::size_t t = 0; t < alpha.size() && feasible; ++t) {
          if (alpha[t] == 0) continue;
          if (g.degree_of(t) > p.l) { feasible = false; break; } // factor dies in C^l
          auto it = p.by_word.find(g.label_word(t));
          if (it == p.by_word.end())
            throw consistency_error("separation_probe: missing image for " + g.label_str(t));
          for (int e = 0; e < alpha[t]; ++e) prod = weyl_mul(prod, it->second);
        }
        if (feasible && !prod.is_zero()) {
          entry.separated = true;
          entry.witness = "candidate " + std::to_string(k + 1);
        }
      }
      if (!entry.separated) {
        bool pure_deg1 = true;
        for (std::size_t t = 0; t < alpha.size(); ++t)
          if (alpha[t] > 0 && g.degree_of(t) != 1) { pure_deg1 = false; break; }
        if (pure_deg1) {
          // One-dimensional character with every generator at 1: the value
          // of the monomial is 1, never zero.
          entry.separated = true;
          entry.witness = "character";
        }
      }
      if (!entry.separated) report.all_separated = false;
      report.entries.push_back(std::move(entry));
    }
  }
  return report;
}

} // namespace ymcas
