#pragma once

// Slow, independent reference computations. None of these call the
// Sylvester, Bezout, mu-basis or section code under test.

#include "affine_frames/poly.hpp"

#include <vector>

namespace af_test {

using affine_frames::PolyMatrix;
using affine_frames::Polynomial;
using affine_frames::PolyVector;
using affine_frames::RatMatrix;

/// Laplace expansion along the first row.
Polynomial cofactor_determinant(const PolyMatrix& m);

/// Matrix of h -> <v, h> on vectors of degree <= e, built by multiplying
/// monomials: column (j, i) holds the coefficients of t^j v_i.
RatMatrix multiplication_matrix(const PolyVector& v, int e);

/// Smallest e with some b, deg b <= e, <v, b> = 1; -1 if none up to deg v.
int min_bezout_degree(const PolyVector& v);

/// dim { h : deg h <= e, <v, h> = 0 }
std::size_t syzygy_dimension(const PolyVector& v, int e);

/// Degrees of a mu-basis recovered from syzygy dimensions alone:
/// dim Syz_e - dim Syz_{e-1} = #{ i : mu_i <= e }.
std::vector<int> mu_degrees(const PolyVector& v);

/// Rightmost independent columns of V found by rank of growing submatrices.
std::vector<std::size_t> rightmost_profile(const RatMatrix& V);

/// Every structural constraint of the canonical coefficient matrix, checked
/// entry by entry; returns a description of the first violation or "".
std::string canonical_violation(const PolyVector& v);

}  // namespace af_test
