#ifndef YMCAS_KOSZUL_HPP
#define YMCAS_KOSZUL_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "ymcas/matrix.hpp"

namespace ymcas {

/// Monomial basis of the symmetric power S^p over n variables: exponent
/// vectors with |alpha| = p, lexicographically ascending. Count is checked
/// against C(n+p-1, p) at construction. p < 0 gives the zero space.
struct SymBasis {
  int n = 0;
  int p = 0;
  std::vector<std::vector<int>> monomials;
  std::map<std::vector<int>, std::size_t> index;

  std::size_t dim() const { return monomials.size(); }
};

SymBasis sym_basis(int n, int p);

/// The three differentials of the complex
///
///   S^{m}  --d3-->  S^{m+1} (x) V  --d2-->  S^{m+3} (x) V  --d1-->  S^{m+4}
///
/// in monomial coordinates:
///   d3(w)        = sum_i x_i w (x) x_i
///   d2(w (x) x_i) = sum_j (x_j^2 w (x) x_i  -  x_i x_j w (x) x_j)
///   d1(w (x) x_i) = x_i w
///
/// A basis vector of S^m (x) V with monomial index k and variable i (1-based)
/// sits at column/row k*n + (i-1).
RatMatrix mat_d1(int n, int m); // S^m (x) V -> S^{m+1}
RatMatrix mat_d2(int n, int m); // S^m (x) V -> S^{m+2} (x) V
RatMatrix mat_d3(int n, int m); // S^m -> S^{m+1} (x) V

/// One graded slice of the complex: the three matrices d_3^{p-1}, d_2^p,
/// d_1^{p+2} whose consecutive compositions vanish (checked exactly at
/// construction).
struct KoszulSlice {
  int n = 0;
  int p = 0;
  RatMatrix d3, d2, d1;
};

KoszulSlice build_slice(int n, int p);

/// Homology dimensions read off the slice bookkeeping: h1 at slice p is
/// Ker(d_1^p)/Im(d_2^{p-2}), h2 is Ker(d_2^p)/Im(d_3^{p-1}), h3 = Ker(d_3^p),
/// and h0 is the cokernel of d_1^{p-1} in S^p. Expected values h0 = [p = 0],
/// h2 = h3 = 0 are computed, not assumed; dim Ker(d_1^p) is checked against
/// the closed count n*C(n+p-1,p) - C(n+p,p+1). (The low cases p <= 1 of the
/// closed h1 formula are sometimes printed without the p! divisor of the
/// general branch; both readings coincide there, and the ranks computed here
/// settle the value exactly either way.)
struct HomologyDims {
  int p = 0;
  std::size_t h0 = 0, h1 = 0, h2 = 0, h3 = 0;
};

HomologyDims homology_dims(int n, int p);

/// Dimensions of the generator space W(n) by degree, out[m] for m <= M:
/// out[m] = h1 of slice m-1, zero below degree 2. Cross-checked against the
/// independent series computation w_series(n); a mismatch throws.
std::vector<std::size_t> w_dims(int n, int M);

} // namespace ymcas

#endif
