#include "ymcas/orbit.hpp"

#include <stdexcept>

#include "ymcas/errors.hpp"
#include "ymcas/matrix.hpp"

namespace ymcas {

Rational Functional::value(const LieVec& v) const {
  Rational acc;
  for (const auto& [i, c] : v) acc += c * dual.at(i);
  return acc;
}

Functional functional_zero(const GradedNilpotentLie& g) {
  return Functional{std::vector<Rational>(g.dim())};
}

Functional functional_from_labels(const GradedNilpotentLie& g,
                                  const std::map<std::string, std::string>& coords) {
  auto parse_label = [](const std::string& s) -> Word {
    if (s.size() < 2 || s[0] != 'x')
      throw std::invalid_argument("functional: label must look like x112");
    return parse_word(s.substr(1));
  };

  if (g.n() == 3 && g.cls() <= 4) {
    // Published labels. The given values are f on the published basis; the
    // canonical dual vector d solves B^T d = c where column e of B holds the
    // canonical coordinates of published element e.
    std::vector<PaperBasisElement> basis = paper_basis(g);
    std::map<Word, std::size_t> pos;
    for (std::size_t k = 0; k < basis.size(); ++k) pos.emplace(basis[k].label, k);

    std::vector<Rational> c(basis.size());
    for (const auto& [label, val] : coords) {
      auto it = pos.find(parse_label(label));
      if (it == pos.end())
        throw std::invalid_argument("functional: unknown published label " + label);
      c[it->second] = Rational::parse(val);
    }
    RatMatrix bt(basis.size(), g.dim()); // row k = coordinates of element k
    for (std::size_t k = 0; k < basis.size(); ++k)
      for (const auto& [i, v] : basis[k].coords) bt.at(k, i) = v;
    return Functional{solve_square(bt, c)};
  }

  Functional f = functional_zero(g);
  for (const auto& [label, val] : coords) {
    auto idx = g.index_of(parse_label(label));
    if (!idx)
      throw std::invalid_argument("functional: unknown canonical label " + label);
    f.dual[*idx] = Rational::parse(val);
  }
  return f;
}

namespace {

RatMatrix bform_matrix(const GradedNilpotentLie& g, const Functional& f) {
  RatMatrix m(g.dim(), g.dim());
  for (std::size_t a = 0; a < g.dim(); ++a)
    for (std::size_t b = a + 1; b < g.dim(); ++b) {
      Rational v = f.value(g.bracket(a, b));
      m.at(a, b) = v;
      m.at(b, a) = -v;
    }
  return m;
}

std::vector<Rational> dense_of(const GradedNilpotentLie& g, const LieVec& v) {
  std::vector<Rational> out(g.dim());
  for (const auto& [i, c] : v) out[i] = c;
  return out;
}

} // namespace

Subspace radical(const GradedNilpotentLie& g, const Functional& f) {
  if (f.dual.size() != g.dim())
    throw std::invalid_argument("radical: functional dimension mismatch");
  Subspace s{kernel_basis(bform_matrix(g, f))};
  if ((g.dim() - s.dim()) % 2 != 0)
    throw consistency_error("radical: antisymmetric form has odd rank");
  return s;
}

std::vector<Subspace> ideal_flag(const GradedNilpotentLie& g) {
  std::vector<Subspace> flag(g.dim() + 1);
  std::vector<bool> in_flag(g.dim(), false);
  std::vector<std::vector<Rational>> acc;

  for (std::size_t step = 1; step <= g.dim(); ++step) {
    std::size_t idx = g.dim() - step; // decreasing degree, reverse order within
    in_flag[idx] = true;
    // Ideality through the structure constants: brackets with anything must
    // stay inside the current index set.
    for (std::size_t a = 0; a < g.dim(); ++a)
      for (const auto& [t, c] : g.bracket(a, idx))
        if (!in_flag[t])
          throw consistency_error("ideal_flag: flag member is not an ideal");
    std::vector<Rational> unit(g.dim());
    unit[idx] = Rational(1);
    acc.push_back(std::move(unit));
    flag[step].basis = acc;
  }
  return flag;
}

namespace {

// Radical of f restricted to the span of the given subspace, expressed in
// ambient coordinates.
std::vector<std::vector<Rational>> restricted_radical(const GradedNilpotentLie& g,
                                                      const Functional& f,
                                                      const Subspace& sub) {
  std::size_t d = sub.dim();
  RatMatrix m(d, d);
  for (std::size_t a = 0; a < d; ++a) {
    LieVec va;
    for (std::size_t i = 0; i < g.dim(); ++i)
      if (!sub.basis[a][i].is_zero()) va.emplace(i, sub.basis[a][i]);
    for (std::size_t b = 0; b < d; ++b) {
      LieVec vb;
      for (std::size_t i = 0; i < g.dim(); ++i)
        if (!sub.basis[b][i].is_zero()) vb.emplace(i, sub.basis[b][i]);
      m.at(a, b) = f.value(g.bracket_vec(va, vb));
    }
  }
  std::vector<std::vector<Rational>> out;
  for (const auto& k : kernel_basis(m)) {
    std::vector<Rational> v(g.dim());
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t i = 0; i < g.dim(); ++i) v[i] += k[a] * sub.basis[a][i];
    out.push_back(std::move(v));
  }
  return out;
}

} // namespace

PolarizationReport standard_polarization(const GradedNilpotentLie& g, const Functional& f) {
  std::vector<Subspace> flag = ideal_flag(g);
  std::vector<std::vector<Rational>> hvecs;
  for (std::size_t i = 1; i <= g.dim(); ++i)
    for (auto& v : restricted_radical(g, f, flag[i])) hvecs.push_back(std::move(v));

  // Canonical spanning rows.
  RatMatrix m(0, g.dim());
  for (const auto& v : hvecs) m.append_row(v);
  RrefResult red = rref(m);
  Subspace h;
  for (std::size_t k = 0; k < red.rank(); ++k) h.basis.push_back(red.mat.row(k));

  PolarizationReport rep;
  rep.f = f;
  rep.radical_dim = radical(g, f).dim();
  rep.weight = g.dim() - h.basis.size();
  rep.polarization = std::move(h);

  if (2 * rep.polarization.dim() != g.dim() + rep.radical_dim)
    throw consistency_error("standard_polarization: dimension identity failed");
  if (!is_polarization(g, f, rep.polarization))
    throw consistency_error("standard_polarization: result fails the polarization criterion");
  return rep;
}

bool is_polarization(const GradedNilpotentLie& g, const Functional& f, const Subspace& h) {
  RatMatrix m(0, g.dim());
  for (const auto& v : h.basis) m.append_row(v);
  RrefResult red = rref(m);
  if (red.rank() != h.dim()) return false; // dependent "basis"

  // Reduce a vector against the rref rows; zero residual means membership.
  auto in_h = [&](std::vector<Rational> v) {
    for (std::size_t k = 0; k < red.rank(); ++k) {
      const Rational& c = v[red.pivots[k]];
      if (c.is_zero()) continue;
      Rational s = c;
      for (std::size_t i = red.pivots[k]; i < g.dim(); ++i)
        v[i] -= s * red.mat.at(k, i);
    }
    for (const auto& x : v)
      if (!x.is_zero()) return false;
    return true;
  };

  std::vector<LieVec> sparse(h.dim());
  for (std::size_t a = 0; a < h.dim(); ++a)
    for (std::size_t i = 0; i < g.dim(); ++i)
      if (!h.basis[a][i].is_zero()) sparse[a].emplace(i, h.basis[a][i]);

  for (std::size_t a = 0; a < h.dim(); ++a)
    for (std::size_t b = a + 1; b < h.dim(); ++b) {
      LieVec br = g.bracket_vec(sparse[a], sparse[b]);
      if (!f.value(br).is_zero()) return false;
      if (!in_h(dense_of(g, br))) return false;
    }
  return 2 * h.dim() == g.dim() + radical(g, f).dim();
}

Subspace stabilizer_condition(const GradedNilpotentLie& g, const Subspace& ideal,
                              const Functional& f) {
  // Verify the documented precondition: bracket-closed and an ideal.
  for (const auto& u : ideal.basis) {
    LieVec vu;
    for (std::size_t i = 0; i < g.dim(); ++i)
      if (!u[i].is_zero()) vu.emplace(i, u[i]);
    for (std::size_t a = 0; a < g.dim(); ++a) {
      LieVec ea{{a, Rational(1)}};
      if (!in_span(dense_of(g, g.bracket_vec(ea, vu)), ideal.basis))
        throw std::invalid_argument("stabilizer_condition: subspace is not an ideal");
    }
  }

  RatMatrix m(ideal.dim(), g.dim());
  for (std::size_t k = 0; k < ideal.dim(); ++k) {
    LieVec vu;
    for (std::size_t i = 0; i < g.dim(); ++i)
      if (!ideal.basis[k][i].is_zero()) vu.emplace(i, ideal.basis[k][i]);
    for (std::size_t a = 0; a < g.dim(); ++a) {
      LieVec ea{{a, Rational(1)}};
      m.at(k, a) = f.value(g.bracket_vec(ea, vu));
    }
  }
  return Subspace{kernel_basis(m)};
}

Functional coadjoint_apply(const GradedNilpotentLie& g, const Functional& f, const LieVec& X) {
  // exp(ad X) as a finite sum: ad X raises degree, so (ad X)^k = 0 for
  // k > class.
  RatMatrix adx = g.ad_matrix(X);
  RatMatrix power = RatMatrix::identity(g.dim());
  RatMatrix total = RatMatrix::identity(g.dim());
  Rational fact(1);
  for (int k = 1; k <= g.cls(); ++k) {
    RatMatrix next(g.dim(), g.dim());
    for (std::size_t r = 0; r < g.dim(); ++r)
      for (std::size_t c = 0; c < g.dim(); ++c) {
        Rational acc;
        for (std::size_t t = 0; t < g.dim(); ++t) acc += adx.at(r, t) * power.at(t, c);
        next.at(r, c) = acc;
      }
    power = std::move(next);
    fact *= Rational(k);
    for (std::size_t r = 0; r < g.dim(); ++r)
      for (std::size_t c = 0; c < g.dim(); ++c)
        total.at(r, c) += power.at(r, c) / fact;
  }

  Functional out = functional_zero(g);
  for (std::size_t c = 0; c < g.dim(); ++c) {
    Rational acc;
    for (std::size_t r = 0; r < g.dim(); ++r) acc += f.dual[r] * total.at(r, c);
    out.dual[c] = acc;
  }
  return out;
}

} // namespace ymcas
