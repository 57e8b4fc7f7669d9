#ifndef YMCAS_SERIES_HPP
#define YMCAS_SERIES_HPP

#include <gmpxx.h>

#include <vector>

namespace ymcas {

/// Integer power series truncated at a fixed degree D. coeffs[k] is the
/// coefficient of t^k, so the vector always has length D+1. All Hilbert
/// series work happens here; every division must be exact and a non-integer
/// intermediate result is a hard error, never a rounding.
struct TruncatedSeries {
  std::vector<mpz_class> coeffs;

  TruncatedSeries() = default;
  explicit TruncatedSeries(int D) : coeffs(D + 1) {}

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  const mpz_class& operator[](int k) const { return coeffs[k]; }
  mpz_class& operator[](int k) { return coeffs[k]; }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;
};

TruncatedSeries series_one(int D);
TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Multiplicative inverse; requires a constant term of 1 or -1 so the result
/// stays integral. Throws std::domain_error otherwise.
TruncatedSeries series_inverse(const TruncatedSeries& a);

/// (1 - t)^n for n >= 0, or its inverse expansion for n < 0.
TruncatedSeries one_minus_t_pow(int n, int D);

/// (1 - t^j)^{-e} truncated at D, expanded binomially as
/// sum_k C(e+k-1, k) t^{jk}. The exponent may be huge (it is typically a
/// graded dimension), hence mpz.
TruncatedSeries geometric_power(int j, const mpz_class& e, int D);

/// Per-degree dimensions N(n)_j of the graded Lie algebra, degrees 1..J.
/// Degrees 1 and 2 come from the presentation (n generators, all brackets
/// survive since the relations live in degree 3); higher degrees use the
/// Moebius formula over the power sums of the roots of t^2 - n t + 1.
struct DimTable {
  int n = 0;
  std::vector<mpz_class> values; // values[j-1] = N(n)_j

  int max_degree() const { return static_cast<int>(values.size()); }
  const mpz_class& at(int j) const { return values[j - 1]; }
};

/// Coefficients of 1/((1-t^2)(1-nt+t^2)) up to degree D: the Hilbert series
/// of the enveloping algebra of the Yang-Mills algebra on n generators.
/// Computed by the order-4 recurrence c_k = n c_{k-1} - n c_{k-3} + c_{k-4}.
/// Requires n >= 2.
TruncatedSeries hilbert_ym(int n, int D);

/// N(n)_j for j = 1..J. N_1 = n, N_2 = n(n-1)/2, and for j >= 3
/// N_j = (1/j) sum_{k | j} mu(j/k) (t1^k + t2^k), where the power sums
/// p_k = t1^k + t2^k follow p_0 = 2, p_1 = n, p_k = n p_{k-1} - p_{k-2}.
/// The division by j must be exact; anything else throws consistency_error.
DimTable lie_dims_moebius(int n, int J);

/// True iff prod_j (1 - t^j)^{-N_j} matches hilbert_ym(n, D) up to degree D.
/// This is the Poincare-Birkhoff-Witt shadow of the dimension table.
bool pbw_check(int n, const DimTable& dims, int D);

/// Coefficients of ((1-t)^n - 1 + nt - nt^3 + t^4)/(1-t)^n up to degree D:
/// the Hilbert series of the graded generator space W(n).
TruncatedSeries w_series(int n, int D);

/// True iff hilbert_ym(n,D) (1-t)^n equals 1/(1 - W(n)(t)) up to degree D.
/// The left side is the Hilbert series of U(tym(n)); equality with the free
/// associative series on W(n) is the numerical shadow of freeness of tym(n).
bool freeness_identity(int n, int D);

/// Moebius function on positive integers (trial division; inputs are tiny).
int moebius(int m);

} // namespace ymcas

#endif
