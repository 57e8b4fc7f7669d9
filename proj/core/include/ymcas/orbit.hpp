#ifndef YMCAS_ORBIT_HPP
#define YMCAS_ORBIT_HPP

#include <map>
#include <string>
#include <vector>

#include "ymcas/rational.hpp"
#include "ymcas/ymquotient.hpp"

namespace ymcas {

/// Linear functional on a GradedNilpotentLie, stored densely over the
/// canonical basis.
struct Functional {
  std::vector<Rational> dual; // dual[i] = f(e_i)

  Rational value(const LieVec& v) const;
};

Functional functional_zero(const GradedNilpotentLie& g);

/// Builds a functional from label -> coefficient strings. For n = 3 with
/// l <= 4 the labels are the published x-labels (x112, x2312, ...) and the
/// coefficients are the values on the published basis, converted to
/// canonical coordinates through the change of basis; otherwise the labels
/// must be canonical Lyndon labels and the values are taken verbatim.
/// Unknown labels or unparsable values are rejected.
Functional functional_from_labels(const GradedNilpotentLie& g,
                                  const std::map<std::string, std::string>& coords);

/// Subspace given by a list of independent coordinate vectors.
struct Subspace {
  std::vector<std::vector<Rational>> basis;

  std::size_t dim() const { return basis.size(); }
};

/// Radical g^f of the form B_f(x, y) = f([x, y]): the kernel of the
/// antisymmetric matrix M_ab = f([e_a, e_b]). Contains the center; its
/// codimension is even (rank of an antisymmetric form), which is verified.
Subspace radical(const GradedNilpotentLie& g, const Functional& f);

/// Complete flag of ideals 0 = g_0 < g_1 < ... < g_dim = g, built by adding
/// basis elements in decreasing degree and, within a degree, in reverse
/// canonical order. In a graded algebra generated in degree 1 every such
/// span is an ideal; this is verified through the structure constants.
/// Returned as the list of index sets' unit-vector subspaces, sizes 0..dim.
std::vector<Subspace> ideal_flag(const GradedNilpotentLie& g);

struct PolarizationReport {
  Functional f;
  std::size_t radical_dim = 0;
  Subspace polarization;
  std::size_t weight = 0; // dim g - dim h = (dim g - radical_dim)/2
};

/// Dixmier's standard polarization along the canonical flag:
/// h = sum_i radical of f restricted to g_i. Verified to be a subalgebra on
/// which f kills brackets, of dimension (dim g + dim g^f)/2.
PolarizationReport standard_polarization(const GradedNilpotentLie& g, const Functional& f);

/// True iff h is bracket-closed, f([h,h]) = 0, and dim h equals
/// (dim g + dim g^f)/2, the subordinate-subalgebra criterion.
bool is_polarization(const GradedNilpotentLie& g, const Functional& f, const Subspace& h);

/// {x in g : f([x, ideal]) = 0}. The ideal must be bracket-closed and an
/// ideal of g, which is checked.
Subspace stabilizer_condition(const GradedNilpotentLie& g, const Subspace& ideal,
                              const Functional& f);

/// f composed with exp(ad X), a coadjoint-orbit move. ad X is nilpotent
/// (it raises degree), so the exponential is a finite sum and exact.
Functional coadjoint_apply(const GradedNilpotentLie& g, const Functional& f, const LieVec& X);

} // namespace ymcas

#endif
