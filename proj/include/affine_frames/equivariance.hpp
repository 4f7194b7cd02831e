#pragma once

#include "affine_frames/completion.hpp"
#include "affine_frames/group.hpp"
#include "affine_frames/poly.hpp"

#include <vector>

namespace affine_frames {

/// Rightmost rank-n column selection of the coefficient matrix V of v.
struct PivotProfile {
  /// Ascending 0-based column indices i_1 < ... < i_n of V; i_n = d.
  std::vector<std::size_t> indices;
  /// Rightmost column of V not in the selection.
  int k = -1;
  Rational det_vbar;
};

/// Greedy right-to-left scan of V keeping columns that raise the rank.
/// Throws Rejection("components linearly dependent") when rank V < n.
PivotProfile pivot_profile(const PolyVector& v);

/// Why v is not regular, if it is not. Regular means gcd 1, linearly
/// independent components and degree >= n.
struct RegularityReport {
  bool coprime = false;
  bool independent = false;
  bool degree_at_least_n = false;
  bool regular() const { return coprime && independent && degree_at_least_n; }
};

RegularityReport check_regular(const PolyVector& v);
/// Throws Rejection naming the first failed condition.
void require_regular(const PolyVector& v);

/// V-bar with its last column divided by det V-bar; det = 1.
/// Equivariant: es1(L v) = L es1(v).
RatMatrix es1(const PolyVector& v);

/// Parameter section: shift-equivariant, SL_n-invariant.
/// Requires a regular v (Rejection otherwise).
Rational es2(const PolyVector& v);

/// Full section rho(v) = (es1(shift(v, -es2(v))), es2(v)).
GroupElement es(const PolyVector& v);

/// rho(v)^{-1} . v
PolyVector canonical(const PolyVector& v);

/// Membership in the image of `canonical`: the staircase coefficient shape
/// (unit leading coefficients at i_j for j < n, det V-bar at (n, d), zeros
/// below each step, zero at row n-(d-k-1), column k).
bool has_canonical_shape(const PolyVector& v);

/// rho(v) . completion(rho(v)^{-1} . v), for any completion map.
Completion equivariantize(const CompletionMap& completion, const PolyVector& v);

/// The equivariant minimal-degree completion map.
Completion emcm(const PolyVector& v);

}  // namespace affine_frames
