#include "ymcas/series.hpp"

#include <stdexcept>

#include "ymcas/errors.hpp"

namespace ymcas {

TruncatedSeries series_one(int D) {
  TruncatedSeries s(D);
  s[0] = 1;
  return s;
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("series_add: degree mismatch");
  TruncatedSeries r(a.degree());
  for (int k = 0; k <= a.degree(); ++k) r[k] = a[k] + b[k];
  return r;
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("series_sub: degree mismatch");
  TruncatedSeries r(a.degree());
  for (int k = 0; k <= a.degree(); ++k) r[k] = a[k] - b[k];
  return r;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("series_mul: degree mismatch");
  int D = a.degree();
  TruncatedSeries r(D);
  for (int i = 0; i <= D; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= D; ++j) {
      if (b[j] == 0) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

TruncatedSeries series_inverse(const TruncatedSeries& a) {
  int D = a.degree();
  if (a[0] != 1 && a[0] != -1)
    throw std::domain_error("series_inverse: constant term must be a unit in Z");
  // b = 1/a solved degree by degree: a0 bk = -(a1 b_{k-1} + ... + ak b0).
  TruncatedSeries b(D);
  b[0] = a[0]; // 1/a0 = a0 for a0 in {1,-1}
  for (int k = 1; k <= D; ++k) {
    mpz_class acc = 0;
    for (int i = 1; i <= k; ++i) acc += a[i] * b[k - i];
    b[k] = -acc * a[0];
  }
  return b;
}

TruncatedSeries one_minus_t_pow(int n, int D) {
  if (n >= 0) {
    // Binomial expansion of (1-t)^n, truncated.
    TruncatedSeries r(D);
    mpz_class c = 1;
    for (int k = 0; k <= D && k <= n; ++k) {
      r[k] = (k % 2 == 0) ? c : -c;
      c = c * (n - k) / (k + 1);
    }
    return r;
  }
  // (1-t)^{-m}: coefficients C(m+k-1, k).
  int m = -n;
  TruncatedSeries r(D);
  mpz_class c = 1;
  for (int k = 0; k <= D; ++k) {
    r[k] = c;
    c = c * (m + k) / (k + 1);
  }
  return r;
}

TruncatedSeries hilbert_ym(int n, int D) {
  if (n < 2) throw std::invalid_argument("hilbert_ym: n must be at least 2");
  if (D < 0) throw std::invalid_argument("hilbert_ym: negative truncation degree");
  TruncatedSeries c(D);
  auto prev = [&](int k) -> mpz_class { return k >= 0 ? c[k] : mpz_class(0); };
  c[0] = 1;
  for (int k = 1; k <= D; ++k)
    c[k] = n * prev(k - 1) - n * prev(k - 3) + prev(k - 4);
  return c;
}

int moebius(int m) {
  if (m <= 0) throw std::invalid_argument("moebius: argument must be positive");
  int result = 1;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    m /= p;
    if (m % p == 0) return 0;
    result = -result;
  }
  if (m > 1) result = -result;
  return result;
}

DimTable lie_dims_moebius(int n, int J) {
  if (n < 2) throw std::invalid_argument("lie_dims_moebius: n must be at least 2");
  if (J < 1) throw std::invalid_argument("lie_dims_moebius: J must be at least 1");
  // Power sums of the two roots of t^2 - n t + 1 = 0.
  std::vector<mpz_class> p(J + 1);
  p[0] = 2;
  if (J >= 1) p[1] = n;
  for (int k = 2; k <= J; ++k) p[k] = n * p[k - 1] - p[k - 2];

  DimTable table;
  table.n = n;
  table.values.resize(J);
  table.values[0] = n;
  if (J >= 2) table.values[1] = mpz_class(n) * (n - 1) / 2;
  for (int j = 3; j <= J; ++j) {
    mpz_class acc = 0;
    for (int k = 1; k <= j; ++k) {
      if (j % k != 0) continue;
      acc += moebius(j / k) * p[k];
    }
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), acc.get_mpz_t(), mpz_class(j).get_mpz_t());
    if (r != 0)
      throw consistency_error("lie_dims_moebius: Moebius sum not divisible by the degree");
    if (q < 0)
      throw consistency_error("lie_dims_moebius: negative dimension");
    table.values[j - 1] = q;
  }
  return table;
}

namespace {

// C(N+k-1, k) in exact arithmetic; N may exceed machine range.
mpz_class rising_binomial(const mpz_class& N, int k) {
  mpz_class c = 1;
  for (int i = 1; i <= k; ++i) {
    c *= N + (k - i);
    mpz_class r;
    mpz_fdiv_qr(c.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t(), mpz_class(i).get_mpz_t());
    if (r != 0) throw consistency_error("rising_binomial: inexact division");
  }
  return c;
}

} // namespace

TruncatedSeries geometric_power(int j, const mpz_class& e, int D) {
  if (j < 1) throw std::invalid_argument("geometric_power: period must be positive");
  if (e < 0) throw std::invalid_argument("geometric_power: exponent must be nonnegative");
  TruncatedSeries factor(D);
  for (int k = 0; j * k <= D; ++k) factor[j * k] = rising_binomial(e, k);
  return factor;
}

bool pbw_check(int n, const DimTable& dims, int D) {
  if (dims.max_degree() < D)
    throw std::invalid_argument("pbw_check: dimension table shorter than requested degree");
  TruncatedSeries acc = series_one(D);
  for (int j = 1; j <= D; ++j)
    acc = series_mul(acc, geometric_power(j, dims.at(j), D));
  return acc == hilbert_ym(n, D);
}

TruncatedSeries w_series(int n, int D) {
  if (n < 2) throw std::invalid_argument("w_series: n must be at least 2");
  // 1 - (1 - nt + nt^3 - t^4) (1-t)^{-n}.
  TruncatedSeries quartic(D);
  quartic[0] = 1;
  if (D >= 1) quartic[1] = -n;
  if (D >= 3) quartic[3] = n;
  if (D >= 4) quartic[4] = -1;
  TruncatedSeries r = series_sub(series_one(D), series_mul(quartic, one_minus_t_pow(-n, D)));
  if (r[0] != 0 || (D >= 1 && r[1] != 0))
    throw consistency_error("w_series: expected vanishing below degree 2");
  return r;
}

bool freeness_identity(int n, int D) {
  TruncatedSeries lhs = series_mul(hilbert_ym(n, D), one_minus_t_pow(n, D));
  TruncatedSeries rhs = series_inverse(series_sub(series_one(D), w_series(n, D)));
  return lhs == rhs;
}

} // namespace ymcas
