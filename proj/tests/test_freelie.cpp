#include "doctest.h"

#include <stdexcept>

#include "ymcas/errors.hpp"
#include "ymcas/freelie.hpp"

using namespace ymcas;

TEST_CASE("words parse and print") {
  CHECK(word_str({1, 1, 2}) == "112");
  CHECK(parse_word("2312") == Word{2, 3, 1, 2});
  CHECK_THROWS_AS(parse_word(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("102"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("a1"), std::invalid_argument);
}

TEST_CASE("lyndon recognition") {
  CHECK(is_lyndon({1}));
  CHECK(is_lyndon({1, 2}));
  CHECK(is_lyndon({1, 1, 2}));
  CHECK(is_lyndon({1, 2, 2}));
  CHECK(!is_lyndon({2, 1}));
  CHECK(!is_lyndon({1, 1}));
  CHECK(!is_lyndon({1, 2, 1}));
  CHECK(!is_lyndon({1, 2, 1, 2}));
}

TEST_CASE("lyndon word generation") {
  // Witt numbers for two letters: (1/j) sum_{d|j} mu(d) 2^{j/d}.
  const std::size_t expect2[] = {2, 1, 2, 3, 6, 9, 18, 30};
  for (int j = 1; j <= 8; ++j) {
    auto words = lyndon_basis(2, j);
    CHECK(words.size() == expect2[j - 1]);
    for (std::size_t k = 0; k < words.size(); ++k) {
      CHECK(is_lyndon(words[k]));
      CHECK(words[k].size() == static_cast<std::size_t>(j));
      if (k > 0) CHECK(words[k - 1] < words[k]);
    }
  }

  auto w33 = lyndon_basis(3, 3);
  std::vector<Word> expect33 = {{1, 1, 2}, {1, 1, 3}, {1, 2, 2}, {1, 2, 3},
                                {1, 3, 2}, {1, 3, 3}, {2, 2, 3}, {2, 3, 3}};
  CHECK(w33 == expect33);

  CHECK_THROWS_AS(lyndon_basis(2, 11), std::invalid_argument); // default cap 10
  CHECK_THROWS_AS(lyndon_basis(0, 2), std::invalid_argument);
}

TEST_CASE("standard bracketing") {
  BracketTree t = standard_bracketing({1, 2});
  CHECK(t.str() == "[x1,x2]");
  CHECK(standard_bracketing({1, 1, 2}).str() == "[x1,[x1,x2]]");

  for (int n = 2; n <= 3; ++n)
    for (int j = 1; j <= 5; ++j)
      for (const Word& w : lyndon_basis(n, j)) {
        BracketTree b = standard_bracketing(w);
        CHECK(b.foliage() == w);
        CHECK(b.word_degree() == j);
      }

  CHECK_THROWS_AS(standard_bracketing({2, 1}), std::invalid_argument);
}

TEST_CASE("tensor expansion of brackets") {
  const Tensor& t12 = lyndon_tensor({1, 2});
  REQUIRE(t12.size() == 2);
  CHECK(t12.at({1, 2}) == Rational(1));
  CHECK(t12.at({2, 1}) == Rational(-1));

  // [x1,[x1,x2]] = 112 - 2*121 + 211
  const Tensor& t112 = lyndon_tensor({1, 1, 2});
  REQUIRE(t112.size() == 3);
  CHECK(t112.at({1, 1, 2}) == Rational(1));
  CHECK(t112.at({1, 2, 1}) == Rational(-2));
  CHECK(t112.at({2, 1, 1}) == Rational(1));
}

TEST_CASE("from_tensor inverts the Lyndon expansion") {
  for (int j = 1; j <= 6; ++j)
    for (const Word& w : lyndon_basis(2, j)) {
      FreeLieElement e = from_tensor(2, lyndon_tensor(w));
      REQUIRE(e.terms.size() == 1);
      CHECK(e.terms.begin()->first == w);
      CHECK(e.terms.begin()->second == Rational(1));
    }

  // Symmetric and non-Lie inputs live outside the Lie subspace.
  CHECK_THROWS_AS(from_tensor(2, Tensor{{{1, 1}, Rational(1)}}), consistency_error);
  CHECK_THROWS_AS(from_tensor(2, Tensor{{{1, 2}, Rational(1)}}), consistency_error);
}

TEST_CASE("free Lie bracket") {
  FreeLieElement x1 = lie_generator(3, 1), x2 = lie_generator(3, 2);
  FreeLieElement b = lie_bracket(x1, x2);
  REQUIRE(b.terms.size() == 1);
  CHECK(b.terms.count({1, 2}) == 1);

  // Antisymmetry and the alternating law.
  CHECK(lie_add(lie_bracket(x2, x1), b).is_zero());
  CHECK(lie_bracket(lie_add(x1, x2), lie_add(x1, x2)).is_zero());

  // [x1, [x1, x2]] is the standard bracketing of the Lyndon word 112.
  FreeLieElement nested = lie_bracket(x1, b);
  REQUIRE(nested.terms.size() == 1);
  CHECK(nested.terms.count({1, 1, 2}) == 1);

  // Jacobi on three concrete elements of mixed degrees.
  FreeLieElement x3 = lie_generator(3, 3);
  FreeLieElement j1 = lie_bracket(x1, lie_bracket(x2, x3));
  FreeLieElement j2 = lie_bracket(x2, lie_bracket(x3, x1));
  FreeLieElement j3 = lie_bracket(x3, lie_bracket(x1, x2));
  CHECK(lie_add(lie_add(j1, j2), j3).is_zero());

  CHECK_THROWS_AS(lie_bracket(x1, lie_generator(2, 1)), std::invalid_argument);
}

TEST_CASE("element bookkeeping") {
  FreeLieElement e = lie_add(lie_generator(2, 1), lie_word(2, {1, 2}));
  CHECK(!e.is_homogeneous());
  CHECK_THROWS_AS(e.degree(), std::logic_error);
  CHECK(lie_scale(Rational(), e).is_zero());
  CHECK(lie_word(2, {1, 2}).degree() == 2);
  CHECK_THROWS_AS(lie_word(2, {2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(lie_word(2, {1, 3}), std::invalid_argument);

  BracketTree t = tree_node(tree_node(tree_leaf(1), tree_leaf(2)), tree_leaf(3));
  FreeLieElement viaEval = lie_eval(3, t);
  FreeLieElement direct = lie_bracket(lie_word(3, {1, 2}), lie_generator(3, 3));
  CHECK(lie_add(viaEval, lie_scale(Rational(-1), direct)).is_zero());
}
