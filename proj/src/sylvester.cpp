#include "affine_frames/sylvester.hpp"

#include "affine_frames/errors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace affine_frames {

SylvesterSystem::SylvesterSystem(const PolyVector& v) : v_(v), n_(v.size()) {
  if (v.is_zero()) throw Rejection("Sylvester matrix undefined for the zero vector");
  d_ = static_cast<std::size_t>(degree_vector(v).value());
  const RatMatrix V = coefficient_matrix(v);
  A_ = RatMatrix(2 * d_ + 1, n_ * (d_ + 1));
  for (std::size_t block = 0; block <= d_; ++block) {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j <= d_; ++j) A_(block + j, block * n_ + i) = V(i, j);
    }
  }
  echelon_ = reduced_row_echelon(A_);

  std::vector<bool> is_pivot(A_.cols(), false);
  for (std::size_t p : echelon_.pivots) {
    is_pivot[p] = true;
    pivots_.push_back(p + 1);
  }
  std::set<std::size_t> residues;
  for (std::size_t c = 0; c < A_.cols(); ++c) {
    if (is_pivot[c]) continue;
    nonpivots_.push_back(c + 1);
    if (residues.insert(c % n_).second) basic_.push_back(c + 1);
  }
}

std::size_t SylvesterSystem::pivot_row(std::size_t pivot) const {
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
  if (it == pivots_.end() || *it != pivot) throw std::out_of_range("not a pivotal index");
  return static_cast<std::size_t>(it - pivots_.begin());
}

std::vector<Rational> SylvesterSystem::apply(std::span<const Rational> h) const {
  if (h.size() != A_.cols()) throw DimensionMismatch("A h: vector length must be n(d+1)");
  return A_ * h;
}

std::vector<Rational> sharp(const PolyVector& h, std::size_t n, std::size_t d) {
  if (h.size() != n) throw DimensionMismatch("sharp: vector length differs from n");
  const Degree deg = degree_vector(h);
  if (deg.is_finite() && deg.value() > static_cast<int>(d)) {
    throw Rejection("sharp: degree exceeds d");
  }
  std::vector<Rational> out(n * (d + 1));
  for (std::size_t i = 0; i < n; ++i) {
    const auto coeffs = h[i].coeffs();
    for (std::size_t j = 0; j < coeffs.size(); ++j) out[j * n + i] = coeffs[j];
  }
  return out;
}

PolyVector flat(std::span<const Rational> h, std::size_t n, std::size_t d) {
  if (n == 0 || h.size() != n * (d + 1)) throw DimensionMismatch("flat: length must be n(d+1)");
  PolyVector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> coeffs(d + 1);
    for (std::size_t j = 0; j <= d; ++j) coeffs[j] = h[j * n + i];
    out[i] = Polynomial(std::move(coeffs));
  }
  return out;
}

}  // namespace affine_frames
