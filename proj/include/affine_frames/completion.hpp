#pragma once

#include "affine_frames/bezout_mu.hpp"
#include "affine_frames/poly.hpp"

#include <functional>

namespace affine_frames {

/// n x n matrix with first column v and determinant 1.
struct Completion {
  PolyMatrix M;
  int bezout_degree = 0;
};

/// Signature shared by every completion map that can be equivariantized.
using CompletionMap = std::function<Completion(const PolyVector&)>;

/// [v u_1 ... u_{n-1}] with (u_i) the mu-basis of a Bezout vector b of v,
/// last column divided by the determinant. Degree is deg v + deg b.
Completion complete_with_bezout(const PolyVector& v, const PolyVector& b);

/// Minimal-degree completion: b = minimal_bezout(v), mu-basis of b.
/// Throws Rejection("not completable") when gcd(v) != 1 or n < 2.
Completion minimal_matrix_completion(const PolyVector& v);

struct CompletionReport {
  bool shape_ok = false;
  bool first_column_ok = false;
  bool unit_determinant = false;
  /// degree(M) == degree(v) + bezout_degree_oracle(v)
  bool minimal = false;
  Degree degree = Degree::minus_infinity();
  Degree minimal_degree = Degree::minus_infinity();

  bool is_completion() const { return shape_ok && first_column_ok && unit_determinant; }
  bool passed() const { return is_completion() && minimal; }
};

CompletionReport verify_completion(const PolyMatrix& M, const PolyVector& v);

/// Q = [b u_1 ... u_{n-1}] with b a minimal Bezout vector of v and (u_i) the
/// normalized degree-ordered mu-basis of v itself; v^T Q = [1 0 ... 0].
PolyMatrix quillen_suslin(const PolyVector& v);

/// Deliberately non-minimal completion: b_hat = b + t^{deg v_1} w_{n-1}, where
/// (w_i) is the mu-basis of v, then complete_with_bezout(v, b_hat).
/// Throws Rejection when gcd(v) != 1 or v_1 = 0.
Completion nonminimal_completion(const PolyVector& v);

}  // namespace affine_frames
