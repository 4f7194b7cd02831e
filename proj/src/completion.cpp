#include "affine_frames/completion.hpp"

#include "affine_frames/errors.hpp"

#include <stdexcept>

namespace affine_frames {
namespace {

void require_completable(const PolyVector& v) {
  if (v.size() < 2) throw Rejection("not completable: n must be at least 2");
  if (v.is_zero() || gcd_vector(v).degree() != 0) {
    throw Rejection("not completable: gcd of components is not 1");
  }
}

}  // namespace

Completion complete_with_bezout(const PolyVector& v, const PolyVector& b) {
  const MuBasis mu = mu_basis(b);
  std::vector<PolyVector> columns;
  columns.reserve(v.size());
  columns.push_back(v);
  columns.insert(columns.end(), mu.elements.begin(), mu.elements.end());
  PolyMatrix M = PolyMatrix::from_columns(columns);

  const Polynomial det = determinant(M);
  if (det.degree() != 0) throw std::logic_error("completion: determinant is not a nonzero constant");
  const std::size_t last = M.cols() - 1;
  M.set_column(last, M.column(last) / det.leading_coeff());
  return {std::move(M), degree_vector(b).value()};
}

Completion minimal_matrix_completion(const PolyVector& v) {
  require_completable(v);
  const BezoutVector b = minimal_bezout(v);
  Completion out = complete_with_bezout(v, b.b);
  out.bezout_degree = b.degree;
  return out;
}

CompletionReport verify_completion(const PolyMatrix& M, const PolyVector& v) {
  CompletionReport report;
  report.shape_ok = M.is_square() && M.rows() == v.size() && v.size() >= 1;
  if (!report.shape_ok) return report;
  report.first_column_ok = M.column(0) == v;
  report.unit_determinant = determinant(M) == Polynomial(1);
  report.degree = degree_matrix(M);
  if (!v.is_zero() && gcd_vector(v).degree() == 0) {
    report.minimal_degree = degree_vector(v) + Degree(bezout_degree_oracle(v));
    report.minimal = report.is_completion() && report.degree == report.minimal_degree;
  }
  return report;
}

PolyMatrix quillen_suslin(const PolyVector& v) {
  require_completable(v);
  const BezoutVector b = minimal_bezout(v);
  const MuBasis mu = mu_basis(v).normalized();
  std::vector<PolyVector> columns{b.b};
  columns.insert(columns.end(), mu.elements.begin(), mu.elements.end());
  return PolyMatrix::from_columns(columns);
}

Completion nonminimal_completion(const PolyVector& v) {
  require_completable(v);
  if (v[0].is_zero()) throw Rejection("nonminimal completion needs a nonzero first component");
  const BezoutVector b = minimal_bezout(v);
  const MuBasis w = mu_basis(v);
  const PolyVector b_hat = b.b + Polynomial::monomial(1, v[0].degree().value()) * w.elements.back();
  return complete_with_bezout(v, b_hat);
}

}  // namespace affine_frames
