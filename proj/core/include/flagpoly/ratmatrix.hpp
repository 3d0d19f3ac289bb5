#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "flagpoly/rational.hpp"

namespace flagpoly {

/// Dense row-major matrix over the rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);

  /// All rows must share a length; an empty list gives a 0 x 0 matrix.
  static RatMatrix from_rows(const std::vector<RatVector>& rows);
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatVector row(std::size_t r) const;
  void append_row(const RatVector& row);
  void swap_rows(std::size_t a, std::size_t b);

  RatVector operator*(const RatVector& x) const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct Rref {
  RatMatrix matrix;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row, in row order
};

/// Reduced row echelon form; zero rows are dropped from the result.
Rref rref(RatMatrix m);
std::size_t rank(const RatMatrix& m);

/// Basis of {x : m x = 0}.
std::vector<RatVector> nullspace(const RatMatrix& m);

/// Unique solution of a square nonsingular system, nullopt when singular.
std::optional<RatVector> solve_square(const RatMatrix& a, const RatVector& b);

Rational determinant(RatMatrix m);

}  // namespace flagpoly
