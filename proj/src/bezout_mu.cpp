#include "affine_frames/bezout_mu.hpp"

#include "affine_frames/errors.hpp"

#include <stdexcept>

namespace affine_frames {
namespace {

void require_coprime(const PolyVector& v, const char* what) {
  if (gcd_vector(v).degree() != 0) throw Rejection(what);
}

int degree_of_last_entry(std::size_t one_based_index, std::size_t n) {
  // ceil(p / n) - 1
  return static_cast<int>((one_based_index + n - 1) / n) - 1;
}

}  // namespace

std::vector<int> MuBasis::degrees() const {
  std::vector<int> out;
  out.reserve(elements.size());
  for (const auto& u : elements) out.push_back(degree_vector(u).value());
  return out;
}

MuBasis MuBasis::normalized() const {
  MuBasis out = *this;
  out.elements.back() = out.elements.back() / lambda;
  out.lambda = 1;
  return out;
}

BezoutVector minimal_bezout(const PolyVector& v) {
  require_coprime(v, "no Bezout vector exists: gcd of components is not 1");
  return minimal_bezout(SylvesterSystem(v));
}

BezoutVector minimal_bezout(const SylvesterSystem& sys) {
  const std::size_t rows = sys.A().rows();
  if (sys.rank() != rows) throw Rejection("no Bezout vector exists: A is rank deficient");
  // rref = E A with A square-invertible on pivotal columns, so the
  // coefficient of the r-th pivotal column in e_1 is E(r, 0).
  std::vector<Rational> b(sys.A().cols());
  std::size_t last = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    const Rational& alpha = sys.row_transform()(r, 0);
    if (alpha == 0) continue;
    const std::size_t p = sys.pivots()[r];
    b[p - 1] = alpha;
    last = p;
  }
  BezoutVector out{flat(b, sys.n(), sys.d()), degree_of_last_entry(last, sys.n())};
  if (scalar_product(sys.vector(), out.b) != Polynomial(1)) {
    throw std::logic_error("minimal_bezout: <v, b> != 1");
  }
  return out;
}

MuBasis mu_basis(const PolyVector& v) {
  if (v.size() < 2) throw Rejection("mu-basis needs n >= 2");
  require_coprime(v, "mu-basis undefined: gcd of components is not 1");
  return mu_basis(SylvesterSystem(v));
}

MuBasis mu_basis(const SylvesterSystem& sys) {
  const std::size_t n = sys.n();
  if (n < 2) throw Rejection("mu-basis needs n >= 2");
  if (sys.basic_nonpivots().size() != n - 1) {
    throw Rejection("mu-basis undefined: expected n-1 basic non-pivotal columns");
  }
  MuBasis out;
  for (std::size_t q : sys.basic_nonpivots()) {
    std::vector<Rational> u(sys.A().cols());
    u[q - 1] = 1;
    // In the rref, column q holds the coefficients of A_{*q} over the
    // preceding pivotal columns.
    for (std::size_t r = 0; r < sys.pivots().size(); ++r) {
      const std::size_t p = sys.pivots()[r];
      if (p >= q) break;
      u[p - 1] = -sys.rref()(r, q - 1);
    }
    out.elements.push_back(flat(u, n, sys.d()));
  }

  const PolyVector w = outer_product(out.elements);
  const PolyVector& v = sys.vector();
  std::size_t lead = 0;
  while (v[lead].is_zero()) ++lead;
  if (w[lead].degree() != v[lead].degree()) throw std::logic_error("mu_basis: outer product not proportional");
  out.lambda = w[lead].leading_coeff() / v[lead].leading_coeff();
  if (out.lambda == 0 || !(w == out.lambda * v)) {
    throw std::logic_error("mu_basis: outer product not proportional to v");
  }
  return out;
}

int bezout_degree_oracle(const PolyVector& v) {
  require_coprime(v, "no Bezout vector exists: gcd of components is not 1");
  const std::size_t n = v.size();
  const auto d = static_cast<std::size_t>(degree_vector(v).value());
  const std::size_t rows = 2 * d + 1;

  // Assemble A directly from the coefficients; the pivot structure of
  // SylvesterSystem is deliberately not consulted here.
  RatMatrix A(rows, n * (d + 1));
  for (std::size_t block = 0; block <= d; ++block) {
    for (std::size_t i = 0; i < n; ++i) {
      for (int j = 0; j <= static_cast<int>(d); ++j) {
        A(block + static_cast<std::size_t>(j), block * n + i) = v[i].coeff(j);
      }
    }
  }
  for (std::size_t e = 0; e <= d; ++e) {
    const std::size_t cols = n * (e + 1);
    RatMatrix plain(rows, cols);
    RatMatrix augmented(rows, cols + 1);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        plain(r, c) = A(r, c);
        augmented(r, c) = A(r, c);
      }
    }
    augmented(0, cols) = 1;
    if (plain.rank() == augmented.rank()) return static_cast<int>(e);
  }
  throw std::logic_error("bezout_degree_oracle: no Bezout vector of degree <= d");
}

}  // namespace affine_frames
