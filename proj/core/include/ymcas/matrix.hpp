#ifndef YMCAS_MATRIX_HPP
#define YMCAS_MATRIX_HPP

#include "ymcas/rational.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace ymcas {

/// Dense matrix of exact rationals, row major. The workhorse behind every
/// dimension count in the library: quotient bases, Koszul homology ranks,
/// radicals and polarizations all reduce to rref/kernel computations here.
class RatMatrix {
public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  void append_row(const std::vector<Rational>& row);
  std::vector<Rational> row(std::size_t r) const;

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

private:
  std::size_t rows_, cols_;
  std::vector<Rational> e_;
};

struct RrefResult {
  RatMatrix mat;                  // reduced row-echelon form, zero rows kept
  std::vector<std::size_t> pivots; // strictly increasing pivot column indices
  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row-echelon form with deterministic pivoting: the pivot of each
/// step is the first nonzero entry in column order. Nothing random, so kernel
/// bases and quotient bases are reproducible across runs and platforms.
RrefResult rref(const RatMatrix& m);

/// Rank only. Same elimination as rref but without back substitution.
std::size_t rank(const RatMatrix& m);

/// Basis of the right kernel {v : m v = 0}; size cols - rank.
/// Free variables are taken in increasing column order with the standard
/// unit assignment, so the result is canonical for a given matrix.
std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m);

/// True iff v lies in the rational span of the given vectors.
bool in_span(const std::vector<Rational>& v,
             const std::vector<std::vector<Rational>>& basis);

/// Solves the square invertible system a x = b. Throws std::domain_error if
/// the matrix is singular.
std::vector<Rational> solve_square(const RatMatrix& a,
                                   const std::vector<Rational>& b);

/// Dimension of the span of the given vectors.
std::size_t span_dim(const std::vector<std::vector<Rational>>& vectors);

/// Inverse of a square matrix. Throws std::domain_error when singular.
RatMatrix inverse(const RatMatrix& a);

/// Growing row space with cheap membership tests: rows are kept mutually
/// reduced, keyed by leading column. insert returns true when the vector
/// enlarged the span.
class IncrementalSpan {
public:
  explicit IncrementalSpan(std::size_t cols) : cols_(cols) {}

  std::size_t dim() const { return rows_.size(); }
  bool insert(std::vector<Rational> v);
  bool contains(std::vector<Rational> v) const;

private:
  std::size_t cols_;
  std::map<std::size_t, std::vector<Rational>> rows_; // lead column -> row
  void reduce(std::vector<Rational>& v) const;
};

} // namespace ymcas

#endif
