#pragma once

// Worked examples used across the test suites.

#include "affine_frames/poly.hpp"

namespace af_test {

using affine_frames::make_rational;
using affine_frames::PolyMatrix;
using affine_frames::Polynomial;
using affine_frames::PolyVector;
using affine_frames::RatMatrix;
using affine_frames::Rational;

inline Rational q(long num, long den = 1) { return make_rational(num, den); }
inline Polynomial tp(int k, const Rational& c = 1) { return Polynomial::monomial(c, k); }
inline const Polynomial T = Polynomial::t();

/// [t^6+1, t^3, t]
inline PolyVector sextic_vector() { return {tp(6) + 1, tp(3), T}; }

/// M_1 and M_3: completions of sextic_vector() of degree 9 and 10.
inline PolyMatrix sextic_completion_m1() { return {{tp(6) + 1, 0, tp(3)}, {tp(3), 0, 1}, {T, -1, 0}}; }
inline PolyMatrix sextic_completion_m3() { return {{tp(6) + 1, 1, tp(3)}, {tp(3), 0, 1}, {T, T - 1, 0}}; }

/// Vector of the worked section example; profile [1,3,4], k = 2, det = 5.
inline PolyVector es2_vector() {
  return {tp(4) + tp(3) + tp(2, 2) + 1, tp(4, 2) + tp(3) + tp(2, 3) + 2, tp(4, 3) + tp(3) + tp(2, 4) + tp(1, 5) + 3};
}

inline RatMatrix es_golden_L() {
  return {{q(-31, 27), q(-1, 3), q(1, 5)}, {q(-53, 27), q(-5, 3), q(2, 5)}, {q(20, 9), q(-3), q(3, 5)}};
}

/// canonical(es2_vector())
inline PolyVector es2_canonical() {
  return {T - q(1, 3), tp(3) - q(1, 27), tp(4, 5) + tp(2, q(25, 3)) + q(325, 81)};
}

/// The quintic curve whose tangent is es2_vector().
inline PolyVector eamfm_curve() {
  return {tp(5, q(1, 5)) + tp(4, q(1, 4)) + tp(3, q(2, 3)) + T,
          tp(5, q(2, 5)) + tp(4, q(1, 4)) + tp(3) + tp(1, 2),
          tp(5, q(3, 5)) + tp(4, q(1, 4)) + tp(3, q(4, 3)) + tp(2, q(5, 2)) + tp(1, 3)};
}

inline PolyMatrix eamfm_golden_F() {
  const PolyVector v = es2_vector();
  return {{v[0], 0, tp(1, q(16, 27))},
          {v[1], q(27, 40), tp(1, q(-22, 27)) - q(34, 27)},
          {v[2], q(243, 80), tp(1, q(-65, 9)) - q(113, 27)}};
}

/// Minimal completion of es2_canonical().
inline PolyMatrix mmc_golden_M() {
  const PolyVector v = es2_canonical();
  return {{v[0], q(27, 80), -T}, {v[1], q(-9, 16), tp(1, q(5, 3)) + q(16, 27)}, {v[2], 1, 0}};
}

/// [2+t+t^4, 3+t^2+t^4, 6+2t^3+t^4]
inline PolyVector sylvester_vector() { return {tp(4) + T + 2, tp(4) + tp(2) + 3, tp(4) + tp(3, 2) + 6}; }

inline RatMatrix sylvester_golden_A() {
  return {{2, 3, 6, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
          {1, 0, 0, 2, 3, 6, 0, 0, 0, 0, 0, 0, 0, 0, 0},
          {0, 1, 0, 1, 0, 0, 2, 3, 6, 0, 0, 0, 0, 0, 0},
          {0, 0, 2, 0, 1, 0, 1, 0, 0, 2, 3, 6, 0, 0, 0},
          {1, 1, 1, 0, 0, 2, 0, 1, 0, 1, 0, 0, 2, 3, 6},
          {0, 0, 0, 1, 1, 1, 0, 0, 2, 0, 1, 0, 1, 0, 0},
          {0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 2, 0, 1, 0},
          {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 2},
          {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1}};
}

/// [t^4+5, t^3+7, c t^2+t+4]
inline PolyVector discontinuity_vector(const Rational& c) { return {tp(4) + 5, tp(3) + 7, tp(2, c) + T + 4}; }

/// [t^3, t, 1] and its non-minimal completion.
inline PolyVector cubic_vector() { return {tp(3), T, 1}; }
inline PolyMatrix cubic_nonminimal() { return {{tp(3), tp(2), -1}, {T, 1, 0}, {1, 0, -tp(3)}}; }

}  // namespace af_test
