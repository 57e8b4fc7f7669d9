#ifndef YMCAS_YMQUOTIENT_HPP
#define YMCAS_YMQUOTIENT_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ymcas/freelie.hpp"
#include "ymcas/matrix.hpp"
#include "ymcas/rational.hpp"

namespace ymcas {

/// Sparse coordinate vector over the canonical basis of a GradedNilpotentLie,
/// keyed by basis index. Zero coefficients are never stored.
using LieVec = std::map<std::size_t, Rational>;

void lievec_add_scaled(LieVec& into, const Rational& c, const LieVec& v);

/// The graded nilpotent quotient of the Yang-Mills Lie algebra on n
/// generators by the part of degree above l. Degrees 1..l survive; the
/// defining relators sum_i [x_i,[x_i,x_j]] generate the quotient ideal in
/// degree 3 and propagate upward by bracketing with generators, which
/// captures the whole ideal because the free Lie algebra is generated in
/// degree 1 (ad of any element is a nested composition of ad's of
/// generators).
///
/// The canonical basis in each degree is the set of Lyndon words left
/// unpivoted when the ideal component is put in reduced row echelon form
/// over the lexicographically ordered Lyndon basis; basis labels are those
/// words. Instances are immutable once built.
class GradedNilpotentLie {
 public:
  static GradedNilpotentLie build(int n, int l);

  int n() const { return n_; }
  int cls() const { return l_; } // nilpotency cutoff
  std::size_t dim() const { return labels_.size(); }
  std::size_t dim(int degree) const;
  std::vector<std::size_t> dims() const;

  int degree_of(std::size_t i) const;
  const Word& label_word(std::size_t i) const;
  std::string label_str(std::size_t i) const; // "x112" style
  std::optional<std::size_t> index_of(const Word& w) const;

  /// [e_i, e_k] in canonical coordinates; antisymmetry and the degree cutoff
  /// are applied here, so any pair of indices is valid.
  LieVec bracket(std::size_t i, std::size_t k) const;
  LieVec bracket_vec(const LieVec& a, const LieVec& b) const;

  /// Matrix of ad(a) acting on the canonical basis, column k = [a, e_k].
  RatMatrix ad_matrix(const LieVec& a) const;

  /// Coordinates of a bracket expression over the generators. Subtrees whose
  /// degree exceeds l contribute zero, mirroring the quotient semantics.
  LieVec reduce(const BracketTree& expr) const;

  /// Projection of a free Lie element (Lyndon coordinates) to the quotient.
  LieVec reduce_free(const FreeLieElement& x) const;

  std::string vec_str(const LieVec& v) const;

  /// Re-runs the construction consistency checks: per-degree dimensions
  /// against the Moebius count, vanishing of the defining relators, and the
  /// Jacobi identity on all interacting basis triples. build already calls
  /// this; it is public so test suites can exercise it on demand. Throws
  /// consistency_error on any failure.
  void verify() const;

 private:
  struct DegreeData {
    std::vector<Word> lyndon;                 // lex-ordered free basis
    std::map<Word, std::size_t> windex;       // word -> position in lyndon
    // Reduced row echelon form of the ideal component, one sparse row per
    // pivot, keyed by pivot position. Row entries are (position, coeff)
    // sorted by position; the pivot entry itself is omitted (it is 1).
    std::map<std::size_t, std::vector<std::pair<std::size_t, Rational>>> rows;
    std::vector<std::ptrdiff_t> label_of;     // lyndon position -> basis index, -1 on pivots
  };

  int n_ = 0, l_ = 0;
  std::vector<DegreeData> deg_;               // index j-1 for degree j
  std::vector<Word> labels_;                  // basis index -> word
  std::vector<int> label_degree_;
  std::map<Word, std::size_t> label_index_;
  std::map<std::pair<std::size_t, std::size_t>, LieVec> sc_; // i < k only

  LieVec project(int degree, std::vector<Rational>& dense) const;
};

/// One element of the published presentation for n = 3: a right-nested bracket
/// word such as 2312 standing for [x2,[x3,[x1,x2]]], together with its
/// canonical coordinates.
struct PaperBasisElement {
  Word label;
  BracketTree tree;
  LieVec coords;
};

/// The named bases B_1..B_l of ym(3)/C^l for l <= 4 (sizes 3, 6, 11, 21),
/// in their published order: generators, then the ordered index sets per
/// degree. Verified to be a basis (square change of coordinates of full
/// rank) before returning; n != 3 is rejected.
std::vector<PaperBasisElement> paper_basis(const GradedNilpotentLie& g);

/// The degree <= 4 rewriting identities of the n = 3 presentation, each
/// checked by reduce. Returns (name, holds) pairs; all should hold.
std::vector<std::pair<std::string, bool>> paper_identities(const GradedNilpotentLie& g);

/// One-dimensional representation x_i -> lambda_i. Brackets act by zero, so
/// the Yang-Mills relators are satisfied for every lambda.
struct CharacterRep {
  int n = 0;
  std::vector<Rational> lambda;
};

CharacterRep character_rep(int n, const std::vector<Rational>& lambda);
Rational character_value(const GradedNilpotentLie& g, const CharacterRep& rep, const LieVec& v);
/// Checks that v -> character_value is a Lie homomorphism to the abelian
/// line: every basis bracket must map to zero.
bool character_hom_check(const GradedNilpotentLie& g, const CharacterRep& rep);

/// Monomial basis of the truncated enveloping algebra: exponent vectors over
/// the canonical Lie basis, listed degree by degree and lexicographically
/// within a degree. Counts are verified against the product formula
/// prod_j (1 - t^j)^{-dim g_j} at construction.
struct PbwMonomialTable {
  int D = 0;
  std::vector<std::vector<std::vector<int>>> monomials; // [degree][k]
  std::vector<mpz_class> counts;                        // counts[d]
};

PbwMonomialTable pbw_monomials(const GradedNilpotentLie& g, int D);

/// Element of the enveloping algebra on the PBW monomial basis.
using PbwElement = std::map<std::vector<int>, Rational>;

/// The derivation d_i determined by d_i(x_j) = delta_ij on generators and
/// d_i(b) = 0 on every bracket basis element, extended by Leibniz. On a PBW
/// monomial this differentiates the commutative polynomial part, so each
/// monomial maps to a single monomial with the x_i exponent dropped by one.
PbwElement derivation_di(const GradedNilpotentLie& g, int i, const PbwElement& u);

/// Dimension, per degree 0..D, of the intersection of the kernels of all
/// d_i inside the enveloping algebra. Requires l >= D so the quotient does
/// not truncate the range. Equals the coefficients of
/// hilbert_ym(n) (1-t)^n, the Hilbert series of the subalgebra generated in
/// degrees >= 2.
std::vector<std::size_t> kernel_intersection_dims(const GradedNilpotentLie& g, int D);

/// Total dimension of the k-th lower central series term C^k = [g, C^{k-1}],
/// C^0 = g, computed by spanning brackets through the structure constants.
std::size_t lower_central_dim(const GradedNilpotentLie& g, int k);

} // namespace ymcas

#endif
