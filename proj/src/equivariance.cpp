#include "affine_frames/equivariance.hpp"

#include "affine_frames/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace affine_frames {
namespace {

// Incremental rank test: keeps an echelon basis of the accepted columns and
// reports whether a candidate column is independent of them.
class ColumnSpan {
 public:
  explicit ColumnSpan(std::size_t n) : n_(n) {}

  bool try_add(std::vector<Rational> col) {
    for (const auto& [row, vec] : basis_) {
      if (col[row] == 0) continue;
      const Rational f = col[row] / vec[row];
      for (std::size_t i = 0; i < n_; ++i) col[i] -= f * vec[i];
    }
    const auto lead = std::find_if(col.begin(), col.end(), [](const Rational& x) { return x != 0; });
    if (lead == col.end()) return false;
    basis_.emplace_back(static_cast<std::size_t>(lead - col.begin()), std::move(col));
    return true;
  }

  std::size_t rank() const { return basis_.size(); }

 private:
  std::size_t n_;
  std::vector<std::pair<std::size_t, std::vector<Rational>>> basis_;
};

}  // namespace

PivotProfile pivot_profile(const PolyVector& v) {
  const std::size_t n = v.size();
  if (n == 0 || v.is_zero()) throw Rejection("components linearly dependent");
  const RatMatrix V = coefficient_matrix(v);
  const std::size_t d = V.cols() - 1;

  PivotProfile profile;
  ColumnSpan span(n);
  for (std::size_t j = d + 1; j-- > 0 && span.rank() < n;) {
    if (span.try_add(V.column(j))) profile.indices.push_back(j);
  }
  if (span.rank() < n) throw Rejection("components linearly dependent");
  std::reverse(profile.indices.begin(), profile.indices.end());

  // k = min{ i_j : i_j = d - n + j } - 1, with j 1-based.
  for (std::size_t j = 0; j < n; ++j) {
    if (profile.indices[j] + n == d + j + 1) {
      profile.k = static_cast<int>(profile.indices[j]) - 1;
      break;
    }
  }
  profile.det_vbar = V.select_columns(profile.indices).determinant();
  return profile;
}

RegularityReport check_regular(const PolyVector& v) {
  RegularityReport report;
  if (v.is_zero()) return report;
  report.coprime = gcd_vector(v).degree() == 0;
  report.independent = coefficient_matrix(v).rank() == v.size();
  report.degree_at_least_n = degree_vector(v) >= Degree(static_cast<int>(v.size()));
  return report;
}

void require_regular(const PolyVector& v) {
  if (v.size() < 2) throw Rejection("regular vectors need n >= 2");
  const RegularityReport r = check_regular(v);
  if (!r.coprime) throw Rejection("not regular: gcd of components is not 1");
  if (!r.independent) throw Rejection("not regular: components linearly dependent");
  if (!r.degree_at_least_n) throw Rejection("parameter section undefined: degree < n");
}

RatMatrix es1(const PolyVector& v) {
  const PivotProfile profile = pivot_profile(v);
  RatMatrix L = coefficient_matrix(v).select_columns(profile.indices);
  const std::size_t last = L.cols() - 1;
  for (std::size_t r = 0; r < L.rows(); ++r) L(r, last) /= profile.det_vbar;
  return L;
}

Rational es2(const PolyVector& v) {
  require_regular(v);
  const PivotProfile profile = pivot_profile(v);
  const RatMatrix L = es1(v);
  const PolyVector reduced = L.inverse() * v;
  const int n = static_cast<int>(v.size());
  const int d = degree_vector(v).value();
  const int k = profile.k;
  const Polynomial& row = reduced[static_cast<std::size_t>(n - (d - k - 1) - 1)];
  const Rational denominator = Rational(k + 1) * row.coeff(k + 1);
  if (denominator == 0) throw std::logic_error("es2: vanishing step coefficient");
  Rational s = row.coeff(k) / denominator;
  s.canonicalize();
  return s;
}

GroupElement es(const PolyVector& v) {
  const Rational s = es2(v);
  return GroupElement(es1(shift(v, -s)), s);
}

PolyVector canonical(const PolyVector& v) { return apply_group(es(v).inverse(), v); }

bool has_canonical_shape(const PolyVector& v) {
  if (!check_regular(v).regular()) return false;
  const PivotProfile profile = pivot_profile(v);
  const RatMatrix V = coefficient_matrix(v);
  const std::size_t n = v.size();
  const std::size_t d = V.cols() - 1;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t col = profile.indices[j];
    const Rational expected = (j + 1 < n) ? Rational(1) : profile.det_vbar;
    if (v[j].degree() != Degree(static_cast<int>(col)) || V(j, col) != expected) return false;
    for (std::size_t below = j + 1; below < n; ++below) {
      if (V(below, col) != 0) return false;
    }
  }
  if (profile.indices.back() != d) return false;
  const int k = profile.k;
  const auto step_row = static_cast<std::size_t>(static_cast<int>(n) - (static_cast<int>(d) - k - 1) - 1);
  return V(step_row, static_cast<std::size_t>(k)) == 0;
}

Completion equivariantize(const CompletionMap& completion, const PolyVector& v) {
  const GroupElement rho = es(v);
  const PolyVector reduced = apply_group(rho.inverse(), v);
  Completion inner = completion(reduced);
  inner.M = apply_group(rho, inner.M);
  return inner;
}

Completion emcm(const PolyVector& v) { return equivariantize(minimal_matrix_completion, v); }

}  // namespace affine_frames
