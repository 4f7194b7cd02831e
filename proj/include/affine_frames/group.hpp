#pragma once

#include "affine_frames/poly.hpp"
#include "affine_frames/rat_matrix.hpp"

#include <vector>

namespace affine_frames {

/// (L, s) in SL_n(Q) x Q acting by (L, s) . W(t) = L W(t + s).
class GroupElement {
 public:
  /// Throws Rejection unless L is square with det(L) = 1 exactly.
  GroupElement(RatMatrix L, Rational s);

  static GroupElement identity(std::size_t n);

  const RatMatrix& L() const { return L_; }
  const Rational& s() const { return s_; }
  std::size_t dimension() const { return L_.rows(); }

  GroupElement inverse() const;
  /// Direct product: (L1, s1) * (L2, s2) = (L1 L2, s1 + s2).
  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  friend bool operator==(const GroupElement& a, const GroupElement& b) = default;

 private:
  RatMatrix L_;
  Rational s_;
};

/// (L, a, s) in SA_n(Q) x Q acting on curves by c(t) -> L c(t + s) + a.
class AffineElement {
 public:
  AffineElement(RatMatrix L, std::vector<Rational> a, Rational s);

  const RatMatrix& L() const { return L_; }
  const std::vector<Rational>& a() const { return a_; }
  const Rational& s() const { return s_; }

  /// The (L, s) part, which is how the element acts on tangents and frames.
  GroupElement linear_part() const { return GroupElement(L_, s_); }

 private:
  RatMatrix L_;
  std::vector<Rational> a_;
  Rational s_;
};

/// L * v(t + s)
PolyVector apply_group(const GroupElement& g, const PolyVector& v);
PolyMatrix apply_group(const GroupElement& g, const PolyMatrix& w);

/// L * c(t + s) + a
PolyVector apply_affine(const AffineElement& g, const PolyVector& c);

/// Constant matrix times polynomial matrix.
PolyMatrix operator*(const RatMatrix& L, const PolyMatrix& w);
PolyVector operator*(const RatMatrix& L, const PolyVector& v);

}  // namespace affine_frames
