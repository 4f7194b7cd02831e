#pragma once

#include "affine_frames/poly.hpp"
#include "affine_frames/rat_matrix.hpp"

#include <cstdint>
#include <random>

namespace af_test {

using affine_frames::PolyMatrix;
using affine_frames::Polynomial;
using affine_frames::PolyVector;
using affine_frames::RatMatrix;
using affine_frames::Rational;

// Seeded source of small exact objects. Every property test owns one, so a
// failing case is reproduced by its seed alone.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi);
  bool coin(double p);
  /// Nonzero with probability 1 unless allow_zero.
  Rational rational(long max_num, long max_den, bool allow_zero = true);

  /// Exactly `degree`; lower coefficients are zero with probability `sparsity`.
  Polynomial polynomial(int degree, double sparsity = 0.3);
  /// Length n, degree exactly d (component degrees vary, at least one is d).
  PolyVector vector(std::size_t n, int d, double sparsity = 0.3);
  /// gcd 1, independent components, degree in [max(n, dmin), dmax].
  PolyVector regular_vector(std::size_t n, int dmin, int dmax);
  /// Same as regular_vector but deg >= 1 only and gcd 1 (may be dependent).
  PolyVector coprime_vector(std::size_t n, int dmin, int dmax);
  /// Regular vector L w(t + s) where w has n distinct component degrees, so
  /// the pivot profile is usually not the top n columns.
  PolyVector staggered_regular_vector(std::size_t n, int dmax);
  /// Generic curve, degree in [n+1, dmax]. With `staggered`, its tangent
  /// comes from staggered_regular_vector.
  PolyVector generic_curve(std::size_t n, int dmax, bool staggered = false);

  /// Element of SL_n(Q) as a product of transvections and a signed swap.
  RatMatrix sl_matrix(std::size_t n);
  std::vector<Rational> rational_vector(std::size_t n, long max_num, long max_den);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace af_test
