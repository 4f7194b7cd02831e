#pragma once

#include "affine_frames/poly.hpp"
#include "affine_frames/rat_matrix.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace affine_frames {

/// The (2d+1) x n(d+1) Sylvester-type matrix A of a nonzero v in Q[t]^n of
/// degree d: d+1 copies of V^T, each shifted down one row, so that
/// flat(A h) = <v, flat(h)>.
///
/// Column indices reported by pivots()/nonpivots()/basic_nonpivots() are
/// 1-based, as columns of A are numbered 1..n(d+1). Everything else in the
/// library (coefficient matrices, pivot profiles) numbers from 0.
class SylvesterSystem {
 public:
  /// Throws Rejection for the zero vector.
  explicit SylvesterSystem(const PolyVector& v);

  const PolyVector& vector() const { return v_; }
  std::size_t n() const { return n_; }
  std::size_t d() const { return d_; }

  const RatMatrix& A() const { return A_; }
  const RatMatrix& rref() const { return echelon_.reduced; }
  /// E with E * A = rref(A).
  const RatMatrix& row_transform() const { return echelon_.transform; }
  std::size_t rank() const { return echelon_.pivots.size(); }

  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const std::vector<std::size_t>& nonpivots() const { return nonpivots_; }
  /// Smallest non-pivotal index in each residue class mod n.
  const std::vector<std::size_t>& basic_nonpivots() const { return basic_; }

  /// Row of the rref holding the pivot at 1-based column `pivot`.
  std::size_t pivot_row(std::size_t pivot) const;

  /// A h
  std::vector<Rational> apply(std::span<const Rational> h) const;

 private:
  PolyVector v_;
  std::size_t n_;
  std::size_t d_;
  RatMatrix A_;
  RowEchelon echelon_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> nonpivots_;
  std::vector<std::size_t> basic_;
};

inline SylvesterSystem build_sylvester(const PolyVector& v) { return SylvesterSystem(v); }

inline std::vector<Rational> apply_A(const SylvesterSystem& sys, std::span<const Rational> h) {
  return sys.apply(h);
}

/// Stacks the coefficient columns H_{*0}, ..., H_{*d}. Throws Rejection when
/// deg h > d and DimensionMismatch when h does not have length n.
std::vector<Rational> sharp(const PolyVector& h, std::size_t n, std::size_t d);

/// Inverse of sharp: block j of h becomes the t^j coefficients.
PolyVector flat(std::span<const Rational> h, std::size_t n, std::size_t d);

}  // namespace affine_frames
