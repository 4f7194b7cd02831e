#include "affine_frames/rat_matrix.hpp"

#include "affine_frames/errors.hpp"

#include <ostream>
#include <utility>

namespace affine_frames {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionMismatch("ragged matrix initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Rational> RatMatrix::column(std::size_t c) const {
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

RatMatrix RatMatrix::select_columns(std::span<const std::size_t> indices) const {
  RatMatrix out(rows_, indices.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0; j < indices.size(); ++j) out(r, j) = (*this)(r, indices[j]);
  }
  return out;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product: inner dimensions differ");
  RatMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

std::vector<Rational> operator*(const RatMatrix& a, std::span<const Rational> x) {
  if (a.cols_ != x.size()) throw DimensionMismatch("matrix-vector product: length mismatch");
  std::vector<Rational> out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) {
      if (x[j] != 0) out[i] += a(i, j) * x[j];
    }
  }
  return out;
}

Rational RatMatrix::determinant() const {
  if (rows_ != cols_) throw DimensionMismatch("determinant of a non-square matrix");
  RatMatrix m = *this;
  Rational det = 1;
  const std::size_t n = rows_;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(p, c), m(k, c));
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (m(r, k) == 0) continue;
      const Rational f = m(r, k) / m(k, k);
      for (std::size_t c = k; c < n; ++c) m(r, c) -= f * m(k, c);
    }
  }
  return det;
}

RatMatrix RatMatrix::inverse() const {
  if (rows_ != cols_) throw DimensionMismatch("inverse of a non-square matrix");
  RowEchelon e = reduced_row_echelon(*this);
  if (e.pivots.size() != rows_) throw Rejection("matrix is singular");
  return e.transform;
}

std::size_t RatMatrix::rank() const { return reduced_row_echelon(*this).pivots.size(); }

RowEchelon reduced_row_echelon(const RatMatrix& input) {
  RowEchelon out{input, RatMatrix::identity(input.rows()), {}};
  RatMatrix& m = out.reduced;
  RatMatrix& e = out.transform;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  auto swap_rows = [](RatMatrix& x, std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < x.cols(); ++c) std::swap(x(a, c), x(b, c));
  };
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && m(p, col) == 0) ++p;
    if (p == rows) continue;
    if (p != row) {
      swap_rows(m, p, row);
      swap_rows(e, p, row);
    }
    const Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < cols; ++c) m(row, c) *= inv;
    for (std::size_t c = 0; c < e.cols(); ++c) e(row, c) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational f = m(r, col);
      for (std::size_t c = col; c < cols; ++c) m(r, c) -= f * m(row, c);
      for (std::size_t c = 0; c < e.cols(); ++c) e(r, c) -= f * e(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const RatMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << to_string(m(r, c));
    os << ']';
  }
  return os << ']';
}

}  // namespace affine_frames
