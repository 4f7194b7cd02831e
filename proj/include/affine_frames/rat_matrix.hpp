#pragma once

#include "affine_frames/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace affine_frames {

/// Dense matrix over Q, row-major.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::vector<Rational> column(std::size_t c) const;
  /// Columns `indices` in the given order.
  RatMatrix select_columns(std::span<const std::size_t> indices) const;
  RatMatrix transpose() const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend std::vector<Rational> operator*(const RatMatrix& a, std::span<const Rational> x);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

  Rational determinant() const;
  /// Throws Rejection when singular.
  RatMatrix inverse() const;
  std::size_t rank() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::ostream& operator<<(std::ostream& os, const RatMatrix& m);

/// Reduced row-echelon form with its pivot columns (0-based, ascending).
/// `transform` is the invertible E with E * input = reduced.
struct RowEchelon {
  RatMatrix reduced;
  RatMatrix transform;
  std::vector<std::size_t> pivots;
};

/// Exact Gauss-Jordan elimination choosing the leftmost nonzero column as the
/// next pivot and normalizing every pivot to 1.
RowEchelon reduced_row_echelon(const RatMatrix& m);

}  // namespace affine_frames
