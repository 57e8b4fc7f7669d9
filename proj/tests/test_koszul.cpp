#include "doctest.h"

#include <stdexcept>

#include "ymcas/koszul.hpp"
#include "ymcas/series.hpp"

using namespace ymcas;

namespace {

std::size_t dim_sym(int n, int p) { return sym_basis(n, p).dim(); }

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  REQUIRE(a.cols() == b.rows());
  RatMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(r, k).is_zero()) continue;
      for (std::size_t c = 0; c < b.cols(); ++c)
        out.at(r, c) += a.at(r, k) * b.at(k, c);
    }
  return out;
}

bool is_zero(const RatMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m.at(r, c).is_zero()) return false;
  return true;
}

} // namespace

TEST_CASE("symmetric power bases") {
  SymBasis b = sym_basis(3, 2);
  REQUIRE(b.dim() == 6);
  std::vector<std::vector<int>> expect = {{0, 0, 2}, {0, 1, 1}, {0, 2, 0},
                                          {1, 0, 1}, {1, 1, 0}, {2, 0, 0}};
  CHECK(b.monomials == expect);
  for (std::size_t k = 0; k < b.monomials.size(); ++k)
    CHECK(b.index.at(b.monomials[k]) == k);

  CHECK(sym_basis(2, 0).dim() == 1);
  CHECK(sym_basis(4, -1).dim() == 0);
  CHECK(sym_basis(2, 7).dim() == 8);
}

TEST_CASE("differential shapes and first ranks") {
  RatMatrix d1 = mat_d1(3, 2);
  CHECK(d1.rows() == 10); // dim S^3
  CHECK(d1.cols() == 18); // dim S^2 times 3
  CHECK(rank(d1) == 10);  // d1 is onto in positive degrees

  // d3 in the two lowest slices: one column from S^0, then three from S^1.
  RatMatrix d30 = mat_d3(2, 0);
  CHECK(d30.cols() == 1);
  CHECK(rank(d30) == 1);
  RatMatrix d31 = mat_d3(2, 1);
  CHECK(d31.cols() == 2);
  CHECK(rank(d31) == 2);

  // Negative source degree gives genuinely empty maps.
  CHECK(mat_d1(3, -1).cols() == 0);
  CHECK(mat_d3(3, -1).cols() == 0);
}

TEST_CASE("consecutive differentials compose to zero") {
  for (int n = 2; n <= 3; ++n)
    for (int p = 0; p <= 4; ++p) {
      KoszulSlice s = build_slice(n, p);
      if (s.d2.cols() > 0 && s.d3.cols() > 0) CHECK(is_zero(mat_mul(s.d2, s.d3)));
      if (s.d1.cols() > 0 && s.d2.cols() > 0) CHECK(is_zero(mat_mul(s.d1, s.d2)));
    }
}

TEST_CASE("homology dimensions for three generators") {
  // h1 of slice p is 2p+1 above the bottom; everything else is trivial.
  HomologyDims h0 = homology_dims(3, 0);
  CHECK(h0.h0 == 1);
  CHECK(h0.h1 == 0);
  for (int p = 1; p <= 5; ++p) {
    HomologyDims h = homology_dims(3, p);
    CHECK(h.h0 == 0);
    CHECK(h.h1 == static_cast<std::size_t>(2 * p + 1));
    CHECK(h.h2 == 0);
    CHECK(h.h3 == 0);
  }
}

TEST_CASE("homology dimensions for two generators") {
  // The single generator of the subalgebra shows up once, in slice 1.
  for (int p = 0; p <= 5; ++p) {
    HomologyDims h = homology_dims(2, p);
    CHECK(h.h0 == (p == 0 ? 1 : 0));
    CHECK(h.h1 == (p == 1 ? 1 : 0));
    CHECK(h.h2 == 0);
    CHECK(h.h3 == 0);
  }
}

TEST_CASE("generator space dimensions cross-check the series") {
  CHECK(w_dims(3, 6) == std::vector<std::size_t>{0, 0, 3, 5, 7, 9, 11});
  CHECK(w_dims(2, 5) == std::vector<std::size_t>{0, 0, 1, 0, 0, 0});
  CHECK(w_dims(4, 3) == std::vector<std::size_t>{0, 0, 6, 16});
}

TEST_CASE("euler characteristic per internal degree") {
  // The alternating sum over one internal degree m must match the numerator
  // (1 - nt + nt^3 - t^4) expanded against (1-t)^{-n}, i.e. per degree:
  // dim S^m - n dim S^{m-1} + n dim S^{m-3} - dim S^{m-4}
  //   = h0^m - h1^{m-1} + h2^{m-3} - h3^{m-4}.
  auto sdim = [&](int n, int m) -> long {
    return m < 0 ? 0 : static_cast<long>(dim_sym(n, m));
  };
  for (int n = 2; n <= 3; ++n)
    for (int m = 0; m <= 6; ++m) {
      long lhs = sdim(n, m) - n * sdim(n, m - 1) + n * sdim(n, m - 3) - sdim(n, m - 4);
      long rhs = (m == 0 ? 1 : 0);
      if (m >= 1) rhs -= static_cast<long>(homology_dims(n, m - 1).h1);
      if (m >= 3) rhs += static_cast<long>(homology_dims(n, m - 3).h2);
      if (m >= 4) rhs -= static_cast<long>(homology_dims(n, m - 4).h3);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("koszul argument guards") {
  CHECK_THROWS_AS(homology_dims(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(sym_basis(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_slice(3, -1), std::invalid_argument);
}
