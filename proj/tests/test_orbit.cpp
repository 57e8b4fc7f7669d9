#include "doctest.h"

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "ymcas/matrix.hpp"
#include "ymcas/orbit.hpp"
#include "ymcas/ymquotient.hpp"

using namespace ymcas;

namespace {

std::vector<Rational> unit(std::size_t dim, std::size_t i) {
  std::vector<Rational> v(dim);
  v[i] = Rational(1);
  return v;
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

TEST_CASE("functionals from published labels act by duality") {
  GradedNilpotentLie g = GradedNilpotentLie::build(3, 3);
  Functional f = functional_from_labels(g, {{"x112", "1"}});
  for (const auto& e : paper_basis(g)) {
    Rational expect = (word_str(e.label) == "112") ? Rational(1) : Rational();
    CHECK(f.value(e.coords) == expect);
  }

  CHECK_THROWS_AS(functional_from_labels(g, {{"x999", "1"}}), std::invalid_argument);
  CHECK_THROWS_AS(functional_from_labels(g, {{"x112", "nope"}}), std::invalid_argument);
  CHECK_THROWS_AS(functional_from_labels(g, {{"112", "1"}}), std::invalid_argument);
}

TEST_CASE("functionals from canonical labels outside the published range") {
  GradedNilpotentLie g = GradedNilpotentLie::build(2, 2);
  Functional f = functional_from_labels(g, {{"x12", "1"}});
  CHECK(f.dual[0].is_zero());
  CHECK(f.dual[1].is_zero());
  CHECK(f.dual[2] == Rational(1));
}

TEST_CASE("radical of the published weight-1 functional") {
  GradedNilpotentLie g = GradedNilpotentLie::build(3, 2);
  Functional f = functional_from_labels(g, {{"x13", "1"}, {"x23", "1"}});
  Subspace rad = radical(g, f);
  REQUIRE(rad.dim() == 4);

  // Span is x1 - x2 plus the whole degree-2 block.
  std::vector<Rational> diff(g.dim());
  diff[0] = Rational(1);
  diff[1] = Rational(-1);
  CHECK(in_span(diff, rad.basis));
  for (std::size_t i = 3; i < 6; ++i) CHECK(in_span(unit(g.dim(), i), rad.basis));
  std::vector<Rational> x1 = unit(g.dim(), 0);
  CHECK(!in_span(x1, rad.basis));
}

TEST_CASE("radical of the zero functional is everything") {
  GradedNilpotentLie g = GradedNilpotentLie::build(3, 3);
  CHECK(radical(g, functional_zero(g)).dim() == g.dim());
}

TEST_CASE("radical picks out the Heisenberg center") {
  GradedNilpotentLie g = GradedNilpotentLie::build(2, 2);
  Functional f = functional_from_labels(g, {{"x12", "1"}});
  Subspace rad = radical(g, f);
  REQUIRE(rad.dim() == 1);
  CHECK(in_span(unit(3, 2), rad.basis));
}

TEST_CASE("ideal flag structure") {
  GradedNilpotentLie g = GradedNilpotentLie::build(3, 2);
  auto flag = ideal_flag(g);
  REQUIRE(flag.size() == 7);
  for (std::size_t k = 0; k < flag.size(); ++k) CHECK(flag[k].dim() == k);

  // The first three members exhaust the degree-2 block, top label first.
  CHECK(in_span(unit(6, 5), flag[1].basis));
  CHECK(in_span(unit(6, 4), flag[2].basis));
  CHECK(in_span(unit(6, 3), flag[3].basis));
  CHECK(!in_span(unit(6, 2), flag[3].basis));
}

TEST_CASE("published functionals give weights one through four") {
  struct Case {
    int l;
    std::map<std::string, std::string> coords;
    std::size_t weight;
    std::vector<std::string> h_labels;
  };
  const std::vector<Case> cases = {
      {2, {{"x13", "1"}, {"x23", "1"}}, 1, {"x1", "x2", "x12", "x13", "x23"}},
      {3, {{"x112", "1"}}, 2,
       {"x2", "x12", "x13", "x23", "x112", "x221", "x113", "x123", "x312"}},
      {3, {{"x112", "1"}, {"x123", "1"}}, 3,
       {"x12", "x13", "x23", "x112", "x221", "x113", "x123", "x312"}},
      {4, {{"x312", "1"}, {"x2312", "1"}, {"x1112", "1"}}, 4,
       {"x12", "x13", "x112", "x221", "x113", "x123", "x312", "x1112", "x1221",
        "x1113", "x1123", "x2221", "x2113", "x2312", "x3112", "x3221", "x3312"}}};

  for (const auto& c : cases) {
    CAPTURE(c.l);
    GradedNilpotentLie g = GradedNilpotentLie::build(3, c.l);
    Functional f = functional_from_labels(g, c.coords);
    PolarizationReport rep = standard_polarization(g, f);
    CHECK(rep.weight == c.weight);
    CHECK(rep.polarization.dim() == (g.dim() + rep.radical_dim) / 2);
    CHECK(is_polarization(g, f, rep.polarization));

    // The hand-picked subalgebras pass the same criterion.
    Subspace h = subspace_from_paper_labels(g, c.h_labels);
    CHECK(h.dim() == g.dim() - c.weight);
    CHECK(is_polarization(g, f, h));
  }
}

TEST_CASE("is_polarization rejects non-subordinate subspaces") {
  GradedNilpotentLie g = GradedNilpotentLie::build(3, 3);
  Functional f = functional_from_labels(g, {{"x112", "1"}});
  Subspace whole;
  for (std::size_t i = 0; i < g.dim(); ++i) whole.basis.push_back(unit(g.dim(), i));
  CHECK(!is_polarization(g, f, whole)); // f does not kill [g, g]
}

TEST_CASE("stabilizer condition") {
  GradedNilpotentLie g = GradedNilpotentLie::build(3, 4);

  Subspace tym; // everything of degree >= 2 forms an ideal
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (g.degree_of(i) >= 2) tym.basis.push_back(unit(g.dim(), i));
  REQUIRE(tym.dim() == 18);

  SUBCASE("trivial inputs give the whole algebra") {
    CHECK(stabilizer_condition(g, tym, functional_zero(g)).dim() == g.dim());
    CHECK(stabilizer_condition(g, Subspace{}, functional_zero(g)).dim() == g.dim());
  }

  SUBCASE("the weight-4 functional pushes the stabilizer below degree one") {
    Functional f = functional_from_labels(
        g, {{"x312", "1"}, {"x2312", "1"}, {"x1112", "1"}});
    Subspace st = stabilizer_condition(g, tym, f);
    CHECK(st.dim() == 16);

    // No nonzero combination of the generators survives: the union of st
    // with the degree-1 block has full combined dimension.
    auto all = st.basis;
    for (std::size_t i = 0; i < 3; ++i) all.push_back(unit(g.dim(), i));
    CHECK(span_dim(all) == st.dim() + 3);
  }

  SUBCASE("non-ideals are rejected") {
    Subspace notIdeal{{unit(g.dim(), 0)}}; // span{x1} is not an ideal
    CHECK_THROWS_AS(stabilizer_condition(g, notIdeal, functional_zero(g)),
                    std::invalid_argument);
  }
}

TEST_CASE("coadjoint moves preserve the radical dimension") {
  GradedNilpotentLie g = GradedNilpotentLie::build(3, 3);
  Functional f = functional_from_labels(g, {{"x112", "1"}, {"x123", "1"}});
  const std::size_t base = radical(g, f).dim();

  Functional same = coadjoint_apply(g, f, LieVec{});
  CHECK(same.dual == f.dual);

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-4, 4);
  for (int trial = 0; trial < 10; ++trial) {
    LieVec x;
    for (std::size_t i = 0; i < g.dim(); ++i) {
      long c = num(rng);
      if (c != 0) x.emplace(i, Rational(c));
    }
    Functional moved = coadjoint_apply(g, f, x);
    CHECK(radical(g, moved).dim() == base);
    CHECK(standard_polarization(g, moved).weight ==
          standard_polarization(g, f).weight);
  }
}

TEST_CASE("random functionals obey the dimension identities") {
  GradedNilpotentLie g = GradedNilpotentLie::build(3, 3);
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 3);
  for (int trial = 0; trial < 25; ++trial) {
    Functional f = functional_zero(g);
    for (auto& c : f.dual) c = Rational(num(rng), den(rng));
    PolarizationReport rep = standard_polarization(g, f);
    CHECK((g.dim() - rep.radical_dim) % 2 == 0);
    CHECK(rep.weight == (g.dim() - rep.radical_dim) / 2);
    CHECK(rep.polarization.dim() + rep.weight == g.dim());
    CHECK(is_polarization(g, f, rep.polarization));
  }
}
