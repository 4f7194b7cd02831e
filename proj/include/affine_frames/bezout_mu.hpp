#pragma once

#include "affine_frames/poly.hpp"
#include "affine_frames/sylvester.hpp"

#include <vector>

namespace affine_frames {

/// Normalized Bezout vector: <v, b> = 1.
struct BezoutVector {
  PolyVector b;
  int degree = 0;
};

/// Degree-ordered mu-basis u_1..u_{n-1} of v with u_1 ^ ... ^ u_{n-1} = lambda v.
struct MuBasis {
  std::vector<PolyVector> elements;
  Rational lambda;

  std::vector<int> degrees() const;
  /// Last element divided by lambda, so the outer product is exactly v.
  MuBasis normalized() const;
};

/// Minimal-degree Bezout vector supported on the pivotal columns of A: the
/// unique combination of pivotal columns giving e_1, read off the row
/// transform of the rref. Throws Rejection when gcd(v) != 1.
BezoutVector minimal_bezout(const PolyVector& v);
BezoutVector minimal_bezout(const SylvesterSystem& sys);

/// mu-basis read off the basic non-pivotal columns of A. Requires n >= 2 and
/// gcd(v) = 1 (Rejection otherwise).
MuBasis mu_basis(const PolyVector& v);
MuBasis mu_basis(const SylvesterSystem& sys);

/// Smallest e such that A restricted to its first n(e+1) columns reaches e_1,
/// found by comparing ranks of the plain and augmented restricted systems.
int bezout_degree_oracle(const PolyVector& v);

}  // namespace affine_frames
