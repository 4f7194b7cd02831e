#include "oracles.hpp"

#include <algorithm>
#include <string>

namespace af_test {

using affine_frames::Rational;

Polynomial cofactor_determinant(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Polynomial det;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    PolyMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t cc = 0, k = 0; cc < n; ++cc) {
        if (cc != c) minor(r - 1, k++) = m(r, cc);
      }
    }
    const Polynomial term = m(0, c) * cofactor_determinant(minor);
    if (c % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

RatMatrix multiplication_matrix(const PolyVector& v, int e) {
  const std::size_t n = v.size();
  const int d = affine_frames::degree_vector(v).value();
  RatMatrix M(static_cast<std::size_t>(d + e + 1), n * static_cast<std::size_t>(e + 1));
  for (int j = 0; j <= e; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const Polynomial p = Polynomial::monomial(1, j) * v[i];
      for (int k = 0; k <= d + e; ++k) M(static_cast<std::size_t>(k), static_cast<std::size_t>(j) * n + i) = p.coeff(k);
    }
  }
  return M;
}

int min_bezout_degree(const PolyVector& v) {
  const int d = affine_frames::degree_vector(v).value();
  for (int e = 0; e <= d; ++e) {
    const RatMatrix M = multiplication_matrix(v, e);
    RatMatrix aug(M.rows(), M.cols() + 1);
    for (std::size_t r = 0; r < M.rows(); ++r) {
      for (std::size_t c = 0; c < M.cols(); ++c) aug(r, c) = M(r, c);
    }
    aug(0, M.cols()) = 1;
    if (M.rank() == aug.rank()) return e;
  }
  return -1;
}

std::size_t syzygy_dimension(const PolyVector& v, int e) {
  if (e < 0) return 0;
  const RatMatrix M = multiplication_matrix(v, e);
  return M.cols() - M.rank();
}

std::vector<int> mu_degrees(const PolyVector& v) {
  const int d = affine_frames::degree_vector(v).value();
  std::vector<int> out;
  std::size_t seen = 0;
  for (int e = 0; e <= d && out.size() + 1 < v.size(); ++e) {
    const std::size_t count = syzygy_dimension(v, e) - syzygy_dimension(v, e - 1);
    for (; seen < count; ++seen) out.push_back(e);
  }
  return out;
}

std::vector<std::size_t> rightmost_profile(const RatMatrix& V) {
  std::vector<std::size_t> chosen;
  std::size_t rank = 0;
  for (std::size_t j = V.cols(); j-- > 0;) {
    std::vector<std::size_t> trial = chosen;
    trial.push_back(j);
    const std::size_t r = V.select_columns(trial).rank();
    if (r > rank) {
      chosen = trial;
      rank = r;
    }
  }
  std::reverse(chosen.begin(), chosen.end());
  return chosen;
}

std::string canonical_violation(const PolyVector& v) {
  const RatMatrix V = affine_frames::coefficient_matrix(v);
  const std::size_t n = V.rows();
  const std::size_t d = V.cols() - 1;
  const auto idx = rightmost_profile(V);
  if (idx.size() != n) return "rank deficient";
  if (idx.back() != d) return "last profile column is not d";
  const Rational det = V.select_columns(idx).determinant();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t l = 0; l < n; ++l) {
      const Rational expected = j != l ? Rational(0) : (j + 1 < n ? Rational(1) : det);
      if (V(j, idx[l]) != expected) {
        return "entry (" + std::to_string(j) + "," + std::to_string(idx[l]) + ") of the profile block";
      }
    }
    for (std::size_t c = idx[j] + 1; c <= d; ++c) {
      if (V(j, c) != 0) return "row " + std::to_string(j) + " extends past its step";
    }
  }
  long k = -1;
  for (std::size_t j = 0; j < n; ++j) {
    if (idx[j] + n == d + j + 1) {
      k = static_cast<long>(idx[j]) - 1;
      break;
    }
  }
  const long row = static_cast<long>(n) - (static_cast<long>(d) - k - 1) - 1;
  if (k < 0 || row < 0) return "no step index k";
  if (V(static_cast<std::size_t>(row), static_cast<std::size_t>(k)) != 0) return "nonzero at the step (n-(d-k-1), k)";
  return "";
}

}  // namespace af_test
