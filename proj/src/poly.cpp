#include "affine_frames/poly.hpp"

#include "affine_frames/errors.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace affine_frames {

int Degree::value() const {
  if (!finite_) throw std::logic_error("degree is -infinity");
  return value_;
}

std::ostream& operator<<(std::ostream& os, Degree d) {
  if (d.is_minus_infinity()) return os << "-inf";
  return os << d.value();
}

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

Polynomial::Polynomial(int constant) : Polynomial(Rational(constant)) {}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Polynomial::Polynomial(std::initializer_list<Rational> coeffs)
    : Polynomial(std::vector<Rational>(coeffs)) {}

Polynomial Polynomial::monomial(const Rational& c, int k) {
  if (k < 0) throw std::invalid_argument("negative exponent");
  if (c == 0) return {};
  std::vector<Rational> coeffs(static_cast<std::size_t>(k) + 1);
  coeffs.back() = c;
  return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Degree Polynomial::degree() const {
  if (coeffs_.empty()) return Degree::minus_infinity();
  return static_cast<int>(coeffs_.size()) - 1;
}

Rational Polynomial::coeff(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) >= coeffs_.size()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& Polynomial::leading_coeff() const {
  if (coeffs_.empty()) throw std::logic_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  Polynomial p;
  p.coeffs_ = std::move(out);
  p.trim();
  return p;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Polynomial& Polynomial::operator/=(const Rational& c) {
  if (c == 0) throw std::domain_error("division of a polynomial by zero");
  for (auto& x : coeffs_) x /= c;
  return *this;
}

Polynomial Polynomial::shifted(const Rational& s) const {
  if (s == 0 || coeffs_.size() <= 1) return *this;
  // Horner in the ring: ((c_d)(t+s) + c_{d-1})(t+s) + ...
  std::vector<Rational> acc;
  acc.reserve(coeffs_.size());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc.emplace_back(0);
    for (std::size_t i = acc.size() - 1; i > 0; --i) acc[i] = acc[i - 1] + s * acc[i];
    acc[0] = s * acc[0] + *it;
  }
  Polynomial p;
  p.coeffs_ = std::move(acc);
  p.trim();
  return p;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(out));
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  return *this / leading_coeff();
}

DivisionResult divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
  const auto db = static_cast<std::size_t>(b.degree().value());
  if (rem.size() <= db) return {Polynomial(), a};
  std::vector<Rational> quot(rem.size() - db);
  const Rational& lead = b.leading_coeff();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == 0) continue;
    const Rational f = rem[k] / lead;
    quot[k - db] = f;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= f * b.coeffs()[j];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divide(a, b);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
  return q;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = divide(x, y).remainder;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    const Rational& c = p.coeffs()[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << to_string(mag);
    if (k > 0) {
      if (mag != 1) os << '*';
      os << 't';
      if (k > 1) os << '^' << k;
    }
  }
  return os;
}

// ---------------------------------------------------------------- PolyVector

bool PolyVector::is_zero() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const Polynomial& p) { return p.is_zero(); });
}

PolyVector& PolyVector::operator+=(const PolyVector& o) {
  if (o.size() != size()) throw DimensionMismatch("vector sum: length mismatch");
  for (std::size_t i = 0; i < size(); ++i) components_[i] += o.components_[i];
  return *this;
}

PolyVector& PolyVector::operator-=(const PolyVector& o) {
  if (o.size() != size()) throw DimensionMismatch("vector difference: length mismatch");
  for (std::size_t i = 0; i < size(); ++i) components_[i] -= o.components_[i];
  return *this;
}

PolyVector operator*(const Polynomial& p, const PolyVector& v) {
  PolyVector out = v;
  for (auto& c : out.components_) c = p * c;
  return out;
}

PolyVector operator*(const Rational& c, const PolyVector& v) {
  PolyVector out = v;
  for (auto& x : out.components_) x *= c;
  return out;
}

PolyVector operator/(const PolyVector& v, const Rational& c) {
  PolyVector out = v;
  for (auto& x : out.components_) x /= c;
  return out;
}

std::vector<Rational> PolyVector::evaluate(const Rational& x) const {
  std::vector<Rational> out;
  out.reserve(size());
  for (const auto& p : components_) out.push_back(p.evaluate(x));
  return out;
}

std::ostream& operator<<(std::ostream& os, const PolyVector& v) {
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  return os << ']';
}

// ---------------------------------------------------------------- PolyMatrix

PolyMatrix::PolyMatrix(std::initializer_list<std::initializer_list<Polynomial>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionMismatch("ragged matrix initializer");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

PolyMatrix PolyMatrix::from_columns(std::span<const PolyVector> columns) {
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  PolyMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
  return m;
}

PolyVector PolyMatrix::column(std::size_t c) const {
  PolyVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void PolyMatrix::set_column(std::size_t c, const PolyVector& v) {
  if (v.size() != rows_) throw DimensionMismatch("column length differs from row count");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product: inner dimensions differ");
  PolyMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      Polynomial acc;
      for (std::size_t k = 0; k < a.cols_; ++k) acc += a(i, k) * b(k, j);
      out(i, j) = std::move(acc);
    }
  }
  return out;
}

RatMatrix PolyMatrix::evaluate(const Rational& x) const {
  RatMatrix out(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c).evaluate(x);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const PolyMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
    os << ']';
  }
  return os << ']';
}

// ---------------------------------------------------------------- free functions

Degree degree_vector(const PolyVector& v) {
  Degree d = Degree::minus_infinity();
  for (const auto& p : v) d = std::max(d, p.degree());
  return d;
}

Degree degree_matrix(const PolyMatrix& w) {
  Degree total = 0;
  for (std::size_t c = 0; c < w.cols(); ++c) total = total + degree_vector(w.column(c));
  return total;
}

Polynomial gcd_vector(const PolyVector& v) {
  if (v.is_zero()) throw Rejection("gcd undefined for the zero vector");
  Polynomial g;
  for (const auto& p : v) {
    g = gcd(g, p);
    if (g.degree() == 0) break;
  }
  return g;
}

Polynomial shift(const Polynomial& p, const Rational& s) { return p.shifted(s); }

PolyVector shift(const PolyVector& v, const Rational& s) {
  PolyVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].shifted(s);
  return out;
}

PolyMatrix shift(const PolyMatrix& w, const Rational& s) {
  PolyMatrix out(w.rows(), w.cols());
  for (std::size_t r = 0; r < w.rows(); ++r) {
    for (std::size_t c = 0; c < w.cols(); ++c) out(r, c) = w(r, c).shifted(s);
  }
  return out;
}

PolyVector derivative(const PolyVector& v) {
  PolyVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].derivative();
  return out;
}

namespace {

Polynomial bareiss_determinant(PolyMatrix m) {
  const std::size_t n = m.rows();
  bool negate = false;
  Polynomial previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return {};
      for (std::size_t c = 0; c < n; ++c) std::swap(m(p, c), m(k, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = exact_quotient(m(k, k) * m(i, j) - m(i, k) * m(k, j), previous);
      }
      m(i, k) = Polynomial();
    }
    previous = m(k, k);
  }
  Polynomial det = m(n - 1, n - 1);
  return negate ? -det : det;
}

Polynomial cofactor_determinant(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Polynomial det;
  for (std::size_t r = 0; r < n; ++r) {
    if (m(r, 0).is_zero()) continue;
    PolyMatrix minor(n - 1, n - 1);
    for (std::size_t i = 0, mi = 0; i < n; ++i) {
      if (i == r) continue;
      for (std::size_t j = 1; j < n; ++j) minor(mi, j - 1) = m(i, j);
      ++mi;
    }
    Polynomial term = m(r, 0) * cofactor_determinant(minor);
    if (r % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

}  // namespace

Polynomial determinant(const PolyMatrix& w) {
  if (!w.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  if (w.rows() == 0) return 1;
  if (w.rows() <= 6) return bareiss_determinant(w);
  return cofactor_determinant(w);
}

PolyVector outer_product(std::span<const PolyVector> vectors) {
  const std::size_t n = vectors.size() + 1;
  for (const auto& u : vectors) {
    if (u.size() != n) throw DimensionMismatch("outer product needs n-1 vectors of length n");
  }
  if (vectors.empty()) throw DimensionMismatch("outer product needs at least one vector");
  const PolyMatrix u = PolyMatrix::from_columns(vectors);
  PolyVector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    PolyMatrix minor(n - 1, n - 1);
    for (std::size_t r = 0, mr = 0; r < n; ++r) {
      if (r == i) continue;
      for (std::size_t c = 0; c + 1 < n; ++c) minor(mr, c) = u(r, c);
      ++mr;
    }
    Polynomial d = determinant(minor);
    out[i] = (i % 2 == 0) ? d : -d;
  }
  return out;
}

Polynomial scalar_product(const PolyVector& v, const PolyVector& w) {
  if (v.size() != w.size()) throw DimensionMismatch("scalar product: length mismatch");
  Polynomial acc;
  for (std::size_t i = 0; i < v.size(); ++i) acc += v[i] * w[i];
  return acc;
}

PolyMatrix inverse_unimodular(const PolyMatrix& w) {
  if (!w.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
  const Polynomial det = determinant(w);
  if (det.degree() != 0) throw Rejection("determinant is not a nonzero constant");
  const std::size_t n = w.rows();
  PolyMatrix inv(n, n);
  if (n == 1) {
    inv(0, 0) = Polynomial(1 / det.leading_coeff());
    return inv;
  }
  const Rational scale = 1 / det.leading_coeff();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      PolyMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(mr, mc++) = w(r, c);
        }
        ++mr;
      }
      Polynomial cof = determinant(minor) * scale;
      // adj(W)_{ji} = cofactor_{ij}
      inv(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
    }
  }
  return inv;
}

RatMatrix coefficient_matrix(const PolyVector& v) {
  const Degree d = degree_vector(v);
  const std::size_t cols = d.is_finite() ? static_cast<std::size_t>(d.value()) + 1 : 0;
  RatMatrix m(v.size(), cols);
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v[i].coeffs().size(); ++j) m(i, j) = v[i].coeffs()[j];
  }
  return m;
}

}  // namespace affine_frames
