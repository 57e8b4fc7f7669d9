#ifndef YMCAS_FREELIE_HPP
#define YMCAS_FREELIE_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ymcas/rational.hpp"

namespace ymcas {

/// A word over the alphabet {1..n}, e.g. {1,1,2} printed as "112". Lexical
/// comparison is the std::vector one, which is the ordering every basis and
/// pivot rule below refers to.
using Word = std::vector<int>;

std::string word_str(const Word& w);
Word parse_word(const std::string& digits);

/// Degree cap guard shared by the expansion routines. Returns the value of
/// the YMCAS_DEGREE_CAP environment variable if set (read once), otherwise
/// the given default. Keeps accidental huge expansions from hanging a run.
int degree_cap(int fallback);

/// True iff w is strictly smaller than each of its proper suffixes, the
/// Chen-Fox-Lyndon condition.
bool is_lyndon(const Word& w);

/// All Lyndon words of length exactly j over {1..n}, in lexicographic order
/// (Duval's generation). j above the degree cap (default 10) is rejected.
std::vector<Word> lyndon_basis(int n, int j);

/// Binary bracketing tree over generator leaves. Children are shared and
/// immutable so trees copy cheaply.
struct BracketTree {
  int leaf = 0; // generator index when > 0; 0 marks an internal node
  std::shared_ptr<const BracketTree> left, right;

  int word_degree() const;
  Word foliage() const;
  std::string str() const; // "[x1,[x1,x2]]" style
};

BracketTree tree_leaf(int i);
BracketTree tree_node(BracketTree l, BracketTree r);

/// Standard bracketing of a Lyndon word: a letter maps to its generator, and
/// a longer word w factors as w = uv with v the longest proper Lyndon suffix,
/// giving [b(u), b(v)].
BracketTree standard_bracketing(const Word& w);

/// Element of the tensor algebra with rational coefficients, keyed by word.
using Tensor = std::map<Word, Rational>;

Tensor tensor_concat(const Tensor& a, const Tensor& b);
Tensor tensor_add(const Tensor& a, const Tensor& b);
Tensor tensor_scale(const Rational& c, const Tensor& a);

/// Expansion of a bracket tree into the tensor algebra, [a,b] -> ab - ba.
Tensor to_tensor(const BracketTree& t);

/// Memoized tensor expansion of the standard bracketing of a Lyndon word.
const Tensor& lyndon_tensor(const Word& w);

/// Element of the free Lie algebra on n generators, stored in coordinates
/// over the Lyndon-word basis. Mixed degrees are allowed; terms map each
/// Lyndon word to its coefficient and zero coefficients are never stored.
struct FreeLieElement {
  int n = 0;
  std::map<Word, Rational> terms;

  bool is_zero() const { return terms.empty(); }
  bool is_homogeneous() const;
  int degree() const; // word-length grading; throws on mixed degrees
};

FreeLieElement lie_zero(int n);
FreeLieElement lie_generator(int n, int i);
FreeLieElement lie_word(int n, const Word& w); // w must be Lyndon

FreeLieElement lie_add(const FreeLieElement& a, const FreeLieElement& b);
FreeLieElement lie_scale(const Rational& c, const FreeLieElement& a);

/// Rewrites a homogeneous degree-j tensor as a combination of Lyndon-word
/// bracketings by triangular elimination: the lex-smallest surviving word of
/// a Lie element is always Lyndon and carries the coefficient of that basis
/// vector. Throws consistency_error when the input is not in the Lie
/// subspace (a non-Lyndon leading word or a nonzero residue).
FreeLieElement from_tensor(int n, const Tensor& t);

Tensor to_tensor(const FreeLieElement& a);

/// Lie bracket, computed degree block by degree block through the tensor
/// algebra and rewritten into the Lyndon basis.
FreeLieElement lie_bracket(const FreeLieElement& a, const FreeLieElement& b);

/// Evaluation of an explicit bracketing into Lyndon coordinates.
FreeLieElement lie_eval(int n, const BracketTree& t);

} // namespace ymcas

#endif
