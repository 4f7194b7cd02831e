#include "affine_frames/group.hpp"

#include "affine_frames/errors.hpp"

#include <utility>

namespace affine_frames {

GroupElement::GroupElement(RatMatrix L, Rational s) : L_(std::move(L)), s_(std::move(s)) {
  if (L_.rows() != L_.cols() || L_.rows() == 0) throw Rejection("group element: L must be square");
  if (L_.determinant() != 1) throw Rejection("group element: det(L) must be exactly 1");
}

GroupElement GroupElement::identity(std::size_t n) { return {RatMatrix::identity(n), 0}; }

GroupElement GroupElement::inverse() const { return {L_.inverse(), -s_}; }

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  if (a.dimension() != b.dimension()) throw DimensionMismatch("group product: dimension mismatch");
  return {a.L_ * b.L_, a.s_ + b.s_};
}

AffineElement::AffineElement(RatMatrix L, std::vector<Rational> a, Rational s)
    : L_(std::move(L)), a_(std::move(a)), s_(std::move(s)) {
  if (L_.rows() != L_.cols() || L_.rows() == 0) throw Rejection("affine element: L must be square");
  if (L_.determinant() != 1) throw Rejection("affine element: det(L) must be exactly 1");
  if (a_.size() != L_.rows()) throw DimensionMismatch("affine element: translation length differs from n");
}

PolyMatrix operator*(const RatMatrix& L, const PolyMatrix& w) {
  if (L.cols() != w.rows()) throw DimensionMismatch("L * W: dimension mismatch");
  PolyMatrix out(L.rows(), w.cols());
  for (std::size_t i = 0; i < L.rows(); ++i) {
    for (std::size_t j = 0; j < w.cols(); ++j) {
      Polynomial acc;
      for (std::size_t k = 0; k < L.cols(); ++k) {
        if (L(i, k) != 0) acc += w(k, j) * L(i, k);
      }
      out(i, j) = std::move(acc);
    }
  }
  return out;
}

PolyVector operator*(const RatMatrix& L, const PolyVector& v) {
  if (L.cols() != v.size()) throw DimensionMismatch("L * v: dimension mismatch");
  PolyVector out(L.rows());
  for (std::size_t i = 0; i < L.rows(); ++i) {
    for (std::size_t k = 0; k < L.cols(); ++k) {
      if (L(i, k) != 0) out[i] += v[k] * L(i, k);
    }
  }
  return out;
}

PolyVector apply_group(const GroupElement& g, const PolyVector& v) {
  if (g.dimension() != v.size()) throw DimensionMismatch("group action: dimension mismatch");
  return g.L() * shift(v, g.s());
}

PolyMatrix apply_group(const GroupElement& g, const PolyMatrix& w) {
  if (g.dimension() != w.rows()) throw DimensionMismatch("group action: dimension mismatch");
  return g.L() * shift(w, g.s());
}

PolyVector apply_affine(const AffineElement& g, const PolyVector& c) {
  if (g.L().rows() != c.size()) throw DimensionMismatch("affine action: dimension mismatch");
  PolyVector out = g.L() * shift(c, g.s());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += Polynomial(g.a()[i]);
  return out;
}

}  // namespace affine_frames
