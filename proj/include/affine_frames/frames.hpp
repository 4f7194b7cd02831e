#pragma once

#include "affine_frames/equivariance.hpp"
#include "affine_frames/group.hpp"
#include "affine_frames/poly.hpp"

#include <string>
#include <variant>
#include <vector>

namespace affine_frames {

/// Which of the genericity conditions a curve meets.
struct GenericityReport {
  bool dimension_at_least_two = false;
  /// gcd(c') = 1: the tangent never vanishes over the algebraic closure.
  bool nonvanishing_tangent = false;
  /// rank of the coefficient block of t^1..t^d equals n.
  bool spans_affine_space = false;
  /// deg c > n
  bool degree_exceeds_dimension = false;

  bool generic() const {
    return dimension_at_least_two && nonvanishing_tangent && spans_affine_space && degree_exceeds_dimension;
  }
  std::vector<std::string> failures() const;
};

GenericityReport check_generic(const PolyVector& c);

/// A polynomial curve that passed validation.
class GenericCurve {
 public:
  /// Throws Rejection listing the failed conditions.
  explicit GenericCurve(PolyVector c);

  const PolyVector& curve() const { return c_; }
  std::size_t dimension() const { return c_.size(); }

 private:
  PolyVector c_;
};

std::variant<GenericCurve, GenericityReport> validate_generic(const PolyVector& c);

PolyVector derivative(const GenericCurve& c);

struct FrameResult {
  PolyMatrix F;
  GroupElement section;
  PolyVector canonical_tangent;
  int bezout_degree = 0;
};

/// Equi-affine minimal-degree moving frame: emcm(c').
FrameResult eamfm(const GenericCurve& c);

}  // namespace affine_frames
