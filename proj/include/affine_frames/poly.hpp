#pragma once

#include "affine_frames/rat_matrix.hpp"
#include "affine_frames/rational.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace affine_frames {

/// Degree of a polynomial object. The zero polynomial has degree -inf, which
/// absorbs under addition and is the identity for max.
class Degree {
 public:
  constexpr Degree(int value) : value_(value), finite_(true) {}  // NOLINT(implicit)

  static constexpr Degree minus_infinity() { return Degree(); }

  constexpr bool is_finite() const { return finite_; }
  constexpr bool is_minus_infinity() const { return !finite_; }

  /// Throws std::logic_error for -inf.
  int value() const;

  friend constexpr bool operator==(Degree a, Degree b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
    if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
    return a.value_ <=> b.value_;
  }
  friend constexpr Degree operator+(Degree a, Degree b) {
    if (!a.finite_ || !b.finite_) return minus_infinity();
    return Degree(a.value_ + b.value_);
  }

 private:
  constexpr Degree() : value_(0), finite_(false) {}
  int value_;
  bool finite_;
};

std::ostream& operator<<(std::ostream& os, Degree d);

/// Univariate polynomial over Q, dense, ascending powers of t, no trailing
/// zero coefficient.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT(implicit)
  Polynomial(int constant);              // NOLINT(implicit)
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);

  /// c * t^k
  static Polynomial monomial(const Rational& c, int k);
  static Polynomial t() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  Degree degree() const;
  /// Coefficient of t^k; zero outside the stored range.
  Rational coeff(int k) const;
  const Rational& leading_coeff() const;
  std::span<const Rational> coeffs() const { return coeffs_; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  Polynomial& operator/=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator/(Polynomial a, const Rational& c) { return a /= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// p(t + s)
  Polynomial shifted(const Rational& s) const;
  Polynomial derivative() const;
  Rational evaluate(const Rational& x) const;
  Polynomial monic() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};

/// Euclidean division; throws std::domain_error on a zero divisor.
DivisionResult divide(const Polynomial& a, const Polynomial& b);
/// a / b when b divides a; throws std::logic_error otherwise.
Polynomial exact_quotient(const Polynomial& a, const Polynomial& b);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Element of Q[t]^n.
class PolyVector {
 public:
  PolyVector() = default;
  explicit PolyVector(std::size_t n) : components_(n) {}
  explicit PolyVector(std::vector<Polynomial> components) : components_(std::move(components)) {}
  PolyVector(std::initializer_list<Polynomial> components) : components_(components) {}

  std::size_t size() const { return components_.size(); }
  const Polynomial& operator[](std::size_t i) const { return components_[i]; }
  Polynomial& operator[](std::size_t i) { return components_[i]; }
  auto begin() const { return components_.begin(); }
  auto end() const { return components_.end(); }

  bool is_zero() const;

  PolyVector& operator+=(const PolyVector& o);
  PolyVector& operator-=(const PolyVector& o);
  friend PolyVector operator+(PolyVector a, const PolyVector& b) { return a += b; }
  friend PolyVector operator-(PolyVector a, const PolyVector& b) { return a -= b; }
  friend PolyVector operator*(const Polynomial& p, const PolyVector& v);
  friend PolyVector operator*(const Rational& c, const PolyVector& v);
  friend PolyVector operator/(const PolyVector& v, const Rational& c);
  friend bool operator==(const PolyVector& a, const PolyVector& b) = default;

  /// Componentwise value at x.
  std::vector<Rational> evaluate(const Rational& x) const;

 private:
  std::vector<Polynomial> components_;
};

std::ostream& operator<<(std::ostream& os, const PolyVector& v);

/// Dense rows x cols grid of polynomials.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  /// Row-major nested initializer.
  PolyMatrix(std::initializer_list<std::initializer_list<Polynomial>> rows);

  static PolyMatrix identity(std::size_t n);
  /// Columns must share a length.
  static PolyMatrix from_columns(std::span<const PolyVector> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Polynomial& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Polynomial& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  PolyVector column(std::size_t c) const;
  void set_column(std::size_t c, const PolyVector& v);
  PolyMatrix transpose() const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) = default;

  RatMatrix evaluate(const Rational& x) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Polynomial> entries_;
};

std::ostream& operator<<(std::ostream& os, const PolyMatrix& m);

Degree degree_vector(const PolyVector& v);
/// Sum of column degrees.
Degree degree_matrix(const PolyMatrix& w);

/// Monic gcd of the components; throws Rejection("gcd undefined") for the
/// zero vector.
Polynomial gcd_vector(const PolyVector& v);

Polynomial shift(const Polynomial& p, const Rational& s);
PolyVector shift(const PolyVector& v, const Rational& s);
PolyMatrix shift(const PolyMatrix& w, const Rational& s);

PolyVector derivative(const PolyVector& v);

/// Bareiss elimination for n <= 6, cofactor expansion above that.
Polynomial determinant(const PolyMatrix& w);

/// Component i is (-1)^(i+1) det(U without row i), U = [u_1 ... u_{n-1}].
PolyVector outer_product(std::span<const PolyVector> vectors);
Polynomial scalar_product(const PolyVector& v, const PolyVector& w);

/// Inverse of a matrix whose determinant is a nonzero constant, via the
/// adjugate. Throws Rejection otherwise.
PolyMatrix inverse_unimodular(const PolyMatrix& w);

/// Coefficient matrix V (n x (d+1)) with v = V [1, t, ..., t^d]^T. A zero
/// vector yields an n x 0 matrix.
RatMatrix coefficient_matrix(const PolyVector& v);

}  // namespace affine_frames
