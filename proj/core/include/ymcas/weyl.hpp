#ifndef YMCAS_WEYL_HPP
#define YMCAS_WEYL_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ymcas/orbit.hpp"
#include "ymcas/rational.hpp"
#include "ymcas/ymquotient.hpp"

namespace ymcas {

/// Element of the Weyl algebra A_r in normal order: terms map
/// (q-multi-index, p-multi-index) to a nonzero coefficient, standing for
/// sum c q^alpha p^beta. Convention: [p_i, q_j] = delta_ij, so p_i acts as
/// d/dq_i on the polynomial model k[q_1..q_r].
struct WeylElement {
  using Key = std::pair<std::vector<int>, std::vector<int>>;

  int r = 0;
  std::map<Key, Rational> terms;

  bool is_zero() const { return terms.empty(); }
  int q_degree() const; // max |alpha|, -1 when zero
  int p_order() const;  // max |beta|, -1 when zero
  std::string str() const;
};

WeylElement weyl_zero(int r);
WeylElement weyl_one(int r);
WeylElement weyl_q(int r, int i); // q_i, 1-based
WeylElement weyl_p(int r, int i); // p_i, 1-based

WeylElement weyl_add(const WeylElement& a, const WeylElement& b);
WeylElement weyl_scale(const Rational& c, const WeylElement& a);

/// Normal-ordered product. Per variable, p^b q^c rewrites as
/// sum_k C(b,k) C(c,k) k! q^{c-k} p^{b-k}; distinct variables commute.
WeylElement weyl_mul(const WeylElement& a, const WeylElement& b);
WeylElement weyl_comm(const WeylElement& a, const WeylElement& b);

/// Action on the polynomial model: w applied to q^beta (p_i = d/dq_i),
/// returned as monomial -> coefficient.
std::map<std::vector<int>, Rational> weyl_apply(const WeylElement& w,
                                                const std::vector<int>& beta);

/// Monomial basis y^alpha (x) v of the induced module, |alpha| <= D, in
/// graded-lex order. complement holds the canonical-basis indices of the
/// chosen y_1..y_r: the elements outside the polarization, greedily in
/// increasing degree and basis order.
struct InducedModuleBasis {
  std::vector<std::size_t> complement;
  int D = 0;
  std::vector<std::vector<int>> monomials;
  std::map<std::vector<int>, std::size_t> index;
};

/// Sparse action matrix: one column per module monomial, each column a map
/// from target monomial index to coefficient. Targets beyond degree D are
/// truncated away; the extraction step accounts for that.
using ActionMatrix = std::vector<std::map<std::size_t, Rational>>;

struct InducedRep {
  InducedModuleBasis basis;
  std::vector<ActionMatrix> actions; // one per canonical basis element of g
};

/// The induced module U(g) (x)_{U(h)} k_f on the PBW monomials over the
/// complement, with every canonical basis element acting by straightening:
/// commute letters into adapted order (complement first, then h), then let
/// the h-tail act on v through f. The trace twist of the general induced
/// formula vanishes for nilpotent g, which is asserted.
InducedRep induced_rep(const GradedNilpotentLie& g, const Functional& f,
                       const Subspace& h, int D);

/// Recovers, for each basis element of g, the unique Weyl-algebra element
/// matching its action on monomials of degree < D, then checks it against
/// the held-out degree-D monomials. A mismatch means the truncation D was
/// too small and names the failing monomial.
std::map<std::size_t, WeylElement> extract_weyl(const GradedNilpotentLie& g,
                                                const InducedRep& rep);

/// One surjectivity witness: target = sum of coeff * product of images of
/// the listed canonical basis indices (empty word = the unit).
struct WitnessTerm {
  Rational coeff;
  std::vector<std::size_t> word;
};

struct SurjectivityResult {
  bool surjective = false; // false is "inconclusive at this depth"
  int depth = 0;           // word length actually needed (when surjective)
  std::map<std::string, std::vector<WitnessTerm>> witnesses; // "p1", "q2", ...
};

/// Checks that every p_i and q_i lies in the span of normal-ordered products
/// of at most L images (the unit included), with expressing combinations as
/// witnesses. A false result only means the bound L was insufficient.
SurjectivityResult surjectivity_check(const std::vector<WeylElement>& images, int L);

struct WeylMapReport {
  int n = 0, l = 0;
  PolarizationReport polarization;
  std::vector<std::string> labels;        // canonical label strings of g
  std::vector<WeylElement> images;        // per canonical basis element
  bool relator_check = false;             // sum_i [X_i,[X_i,X_j]] = 0 for all j
  bool lie_hom_check = false;             // [X_a, X_b] = image of [e_a, e_b], all pairs
  SurjectivityResult surjectivity;
};

/// Full pipeline: quotient, standard polarization, induced representation at
/// truncation D = l + 2, Weyl extraction, relator and homomorphism checks,
/// bounded surjectivity search.
WeylMapReport ym_weyl_map(int n, int l, const std::map<std::string, std::string>& coords,
                          int surj_depth = 3);
WeylMapReport ym_weyl_map(const GradedNilpotentLie& g, const Functional& f,
                          int surj_depth = 3);

/// Generator actions on the truncated polynomial module k[q]_{<= D}. The
/// relator annihilation check composes the generator matrices, which is only
/// faithful away from the truncation boundary; it is evaluated on inputs far
/// enough below D for all intermediate degrees to stay within range.
struct PullbackModule {
  int D = 0;
  std::vector<std::vector<int>> monomials; // basis of k[q]_{<= D}, graded-lex
  std::vector<RatMatrix> action;           // one matrix per generator x_i
  bool relator_annihilation = false;
};

PullbackModule pullback_module(const WeylMapReport& report, int D);

/// A candidate for the separation probe: a cutoff l and a functional on
/// ym(3)/C^l described by label -> coefficient strings.
struct SeparationCandidate {
  int l = 0;
  std::map<std::string, std::string> coords;
};

/// The built-in candidates: the three published functionals of weights 1, 2
/// and 3, and a strengthened weight-4 functional whose map sends every
/// canonical basis element of ym(3)/C^4 to a nonzero operator (the published
/// weight-4 functional annihilates some of them, so it cannot separate on
/// its own).
std::vector<SeparationCandidate> default_candidates();

struct SeparationEntry {
  std::vector<int> exponents; // over the canonical basis of ym(3)/C^d
  int degree = 0;
  bool separated = false;
  std::string witness; // "candidate k" or "character"
};

struct SeparationReport {
  bool all_separated = false;
  std::vector<SeparationEntry> entries;
};

/// For every PBW basis monomial of U(ym(3)) of degree <= d: does some
/// candidate map send it to a nonzero Weyl element? Monomials in generators
/// alone are also witnessed by the one-dimensional characters (lambda = 1
/// gives value 1). d <= 4 keeps the monomial list at desk scale.
SeparationReport separation_probe(int n, int d,
                                  const std::vector<SeparationCandidate>& candidates);

} // namespace ymcas

#endif
