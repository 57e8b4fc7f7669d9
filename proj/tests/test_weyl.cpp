#include "doctest.h"

#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "ymcas/errors.hpp"
#include "ymcas/orbit.hpp"
#include "ymcas/weyl.hpp"
#include "ymcas/ymquotient.hpp"

using namespace ymcas;

namespace {

bool weyl_eq(const WeylElement& a, const WeylElement& b) {
  return a.r == b.r && a.terms == b.terms;
}

WeylElement pow(const WeylElement& a, int e) {
  WeylElement out = weyl_one(a.r);
  for (int k = 0; k < e; ++k) out = weyl_mul(out, a);
  return out;
}

// Linear extension of weyl_apply to polynomials, the brute-force oracle for
// associativity: applying a product must equal applying the factors in turn.
std::map<std::vector<int>, Rational> apply_poly(
    const WeylElement& w, const std::map<std::vector<int>, Rational>& poly) {
  std::map<std::vector<int>, Rational> out;
  for (const auto& [beta, c] : poly)
    for (const auto& [m, v] : weyl_apply(w, beta)) {
      auto [it, fresh] = out.emplace(m, c * v);
      if (!fresh) {
        it->second += c * v;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  return out;
}

Subspace subspace_from_paper_labels(const GradedNilpotentLie& g,
                                    const std::vector<std::string>& labels) {
  std::map<std::string, LieVec> by_label;
  for (const auto& e : paper_basis(g)) by_label["x" + word_str(e.label)] = e.coords;
  Subspace s;
  for (const auto& label : labels) {
    std::vector<Rational> v(g.dim());
    for (const auto& [i, c] : by_label.at(label)) v[i] = c;
    s.basis.push_back(std::move(v));
  }
  return s;
}

} // namespace

TEST_CASE("weyl normal-order arithmetic") {
  WeylElement p = weyl_p(1, 1), q = weyl_q(1, 1);
  CHECK(weyl_eq(weyl_comm(p, q), weyl_one(1))); // [p, q] = 1

  // p^2 q^2 = q^2 p^2 + 4 q p + 2.
  WeylElement lhs = weyl_mul(pow(p, 2), pow(q, 2));
  WeylElement expect = weyl_mul(pow(q, 2), pow(p, 2));
  expect = weyl_add(expect, weyl_scale(Rational(4), weyl_mul(q, p)));
  expect = weyl_add(expect, weyl_scale(Rational(2), weyl_one(1)));
  CHECK(weyl_eq(lhs, expect));
  CHECK(lhs.str() == "2 + 4 q1 p1 + q1^2 p1^2");

  CHECK(weyl_add(p, weyl_scale(Rational(-1), p)).is_zero());
  CHECK(weyl_zero(2).str() == "0");
  CHECK(lhs.q_degree() == 2);
  CHECK(lhs.p_order() == 2);

  // Distinct variables commute.
  WeylElement p2 = weyl_p(2, 2), q1 = weyl_q(2, 1);
  CHECK(weyl_comm(p2, q1).is_zero());

  CHECK_THROWS_AS(weyl_q(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(weyl_add(weyl_q(1, 1), weyl_q(2, 1)), std::invalid_argument);
}

TEST_CASE("weyl action on the polynomial model") {
  WeylElement p = weyl_p(1, 1), q = weyl_q(1, 1);
  auto dq3 = weyl_apply(p, {3});
  REQUIRE(dq3.size() == 1);
  CHECK(dq3.at({2}) == Rational(3));

  auto qp = weyl_apply(weyl_mul(q, p), {2}); // q d/dq on q^2
  REQUIRE(qp.size() == 1);
  CHECK(qp.at({2}) == Rational(2));

  CHECK(weyl_apply(p, {0}).empty());
}

TEST_CASE("weyl associativity against the polynomial oracle") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> expd(0, 2);
  std::uniform_int_distribution<long> coeff(-5, 5);
  const int r = 2;
  auto random_elem = [&]() {
    WeylElement w = weyl_zero(r);
    for (int t = 0; t < 2; ++t) {
      std::vector<int> qa = {expd(rng), expd(rng)}, pb = {expd(rng), expd(rng)};
      long c = coeff(rng);
      if (c == 0) c = 1;
      WeylElement term = weyl_one(r);
      term.terms = {{{qa, pb}, Rational(c)}};
      w = weyl_add(w, term);
    }
    return w;
  };
  for (int trial = 0; trial < 50; ++trial) {
    WeylElement a = random_elem(), b = random_elem(), c = random_elem();
    CHECK(weyl_eq(weyl_mul(weyl_mul(a, b), c), weyl_mul(a, weyl_mul(b, c))));

    std::map<std::vector<int>, Rational> probe{{{expd(rng) + 2, expd(rng)}, Rational(1)}};
    CHECK(apply_poly(weyl_mul(a, b), probe) == apply_poly(a, apply_poly(b, probe)));
  }
}

TEST_CASE("heisenberg quotient maps onto the first Weyl algebra") {
  WeylMapReport rep = ym_weyl_map(2, 2, {{"x12", "1"}});
  CHECK(rep.polarization.weight == 1);
  CHECK(rep.labels == std::vector<std::string>{"x1", "x2", "x12"});
  REQUIRE(rep.images.size() == 3);
  CHECK(weyl_eq(rep.images[0], weyl_q(1, 1)));
  CHECK(weyl_eq(rep.images[1], weyl_scale(Rational(-1), weyl_p(1, 1))));
  CHECK(weyl_eq(rep.images[2], weyl_one(1)));
  CHECK(rep.relator_check);
  CHECK(rep.lie_hom_check);
  CHECK(rep.surjectivity.surjective);
  CHECK(rep.surjectivity.depth == 1);
  CHECK(rep.surjectivity.witnesses.count("p1") == 1);
  CHECK(rep.surjectivity.witnesses.count("q1") == 1);
}

TEST_CASE("weight-1 map through the published polarization") {
  GradedNilpotentLie g = GradedNilpotentLie::build(3, 2);
  Functional f = functional_from_labels(g, {{"x13", "1"}, {"x23", "1"}});
  Subspace h = subspace_from_paper_labels(g, {"x1", "x2", "x12", "x13", "x23"});
  REQUIRE(is_polarization(g, f, h));

  InducedRep rep = induced_rep(g, f, h, 4);
  auto images = extract_weyl(g, rep);
  REQUIRE(images.size() == 6);
  CHECK(weyl_eq(images.at(0), weyl_p(1, 1)));                        // x1
  CHECK(weyl_eq(images.at(1), weyl_p(1, 1)));                        // x2
  CHECK(weyl_eq(images.at(2), weyl_q(1, 1)));                        // x3
  CHECK(images.at(3).is_zero());                                     // x12
  CHECK(weyl_eq(images.at(4), weyl_one(1)));                         // x13
  CHECK(weyl_eq(images.at(5), weyl_one(1)));                         // x23

  // A subspace failing the polarization criterion is rejected up front.
  Subspace whole;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    std::vector<Rational> v(g.dim());
    v[i] = Rational(1);
    whole.basis.push_back(std::move(v));
  }
  CHECK_THROWS_AS(induced_rep(g, f, whole, 3), std::invalid_argument);
}

TEST_CASE("published functionals map onto Weyl algebras") {
  // The two cheap cases; the heavier weight-3 and weight-4 runs live in the
  // acceptance suite.
  WeylMapReport w1 = ym_weyl_map(3, 2, {{"x13", "1"}, {"x23", "1"}});
  CHECK(w1.polarization.weight == 1);
  CHECK(w1.relator_check);
  CHECK(w1.lie_hom_check);
  CHECK(w1.surjectivity.surjective);
  CHECK(w1.surjectivity.depth == 1);

  WeylMapReport w2 = ym_weyl_map(3, 3, {{"x112", "1"}});
  CHECK(w2.polarization.weight == 2);
  CHECK(w2.relator_check);
  CHECK(w2.lie_hom_check);
  CHECK(w2.surjectivity.surjective);
  CHECK(w2.surjectivity.depth == 1);
}

TEST_CASE("surjectivity search reports failure honestly") {
  // q alone can never produce p.
  std::vector<WeylElement> images = {weyl_q(1, 1)};
  SurjectivityResult r = surjectivity_check(images, 3);
  CHECK(!r.surjective);

  std::vector<WeylElement> both = {weyl_q(1, 1), weyl_p(1, 1)};
  SurjectivityResult s = surjectivity_check(both, 2);
  CHECK(s.surjective);
  CHECK(s.depth == 1);
}

TEST_CASE("pullback modules") {
  WeylMapReport heis = ym_weyl_map(2, 2, {{"x12", "1"}});

  SUBCASE("actions on the truncated polynomial module") {
    PullbackModule m = pullback_module(heis, 2);
    REQUIRE(m.monomials == std::vector<std::vector<int>>{{0}, {1}, {2}});
    REQUIRE(m.action.size() == 2);
    CHECK(m.relator_annihilation);

    // x2 acts as -d/dq: the q^2 column holds -2 q.
    const RatMatrix& a2 = m.action[1];
    CHECK(a2.at(1, 2) == Rational(-2));
    CHECK(a2.at(0, 2).is_zero());
    CHECK(a2.at(2, 2).is_zero());
    // x1 acts as multiplication by q, truncated at the top.
    const RatMatrix& a1 = m.action[0];
    CHECK(a1.at(1, 0) == Rational(1));
    CHECK(a1.at(2, 1) == Rational(1));
    CHECK(a1.at(0, 2).is_zero());
  }

  SUBCASE("degree zero keeps only constants") {
    PullbackModule m = pullback_module(heis, 0);
    REQUIRE(m.monomials.size() == 1);
    for (const auto& mat : m.action)
      CHECK(mat.at(0, 0).is_zero());
    CHECK(m.relator_annihilation); // vacuous below the faithful range
  }

  SUBCASE("identified generators act identically") {
    WeylMapReport w1 = ym_weyl_map(3, 2, {{"x13", "1"}, {"x23", "1"}});
    PullbackModule m = pullback_module(w1, 3);
    REQUIRE(m.action.size() == 3);
    CHECK(m.action[0] == m.action[1]); // x1 and x2 share their image
    CHECK(m.relator_annihilation);
  }

  CHECK_THROWS_AS(pullback_module(heis, -1), std::invalid_argument);
}

TEST_CASE("separation probe on desk-size monomials") {
  auto candidates = default_candidates();
  REQUIRE(candidates.size() == 4);
  CHECK(candidates[0].l == 2);
  CHECK(candidates[3].l == 4);

  SeparationReport rep = separation_probe(3, 2, candidates);
  CHECK(rep.all_separated);
  CHECK(rep.entries.size() == 13); // monomials of degree 0, 1, 2
  for (const auto& e : rep.entries) {
    CHECK(e.separated);
    CHECK(!e.witness.empty());
  }

  CHECK_THROWS_AS(separation_probe(2, 2, candidates), std::invalid_argument);
  CHECK_THROWS_AS(separation_probe(3, 5, candidates), std::invalid_argument);
}
