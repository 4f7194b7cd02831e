#include "affine_frames/frames.hpp"

#include "affine_frames/errors.hpp"

namespace affine_frames {

std::vector<std::string> GenericityReport::failures() const {
  std::vector<std::string> out;
  if (!dimension_at_least_two) out.emplace_back("dimension n must be at least 2");
  if (!nonvanishing_tangent) out.emplace_back("tangent vanishes somewhere: gcd(c') != 1");
  if (!spans_affine_space) out.emplace_back("curve lies in a proper affine subspace: rank Q < n");
  if (!degree_exceeds_dimension) out.emplace_back("degree(c) must exceed n");
  return out;
}

GenericityReport check_generic(const PolyVector& c) {
  GenericityReport report;
  report.dimension_at_least_two = c.size() >= 2;
  const PolyVector tangent = derivative(c);
  report.nonvanishing_tangent = !tangent.is_zero() && gcd_vector(tangent).degree() == 0;
  // rank of Q equals the rank of the coefficient matrix of c' (columns scaled by 1..d).
  report.spans_affine_space = !tangent.is_zero() && coefficient_matrix(tangent).rank() == c.size();
  report.degree_exceeds_dimension = degree_vector(c) > Degree(static_cast<int>(c.size()));
  return report;
}

GenericCurve::GenericCurve(PolyVector c) : c_(std::move(c)) {
  const GenericityReport report = check_generic(c_);
  if (!report.generic()) {
    std::string msg = "curve is not generic:";
    for (const auto& f : report.failures()) msg += " " + f + ";";
    msg.pop_back();
    throw Rejection(msg);
  }
}

std::variant<GenericCurve, GenericityReport> validate_generic(const PolyVector& c) {
  const GenericityReport report = check_generic(c);
  if (!report.generic()) return report;
  return GenericCurve(c);
}

PolyVector derivative(const GenericCurve& c) { return derivative(c.curve()); }

FrameResult eamfm(const GenericCurve& c) {
  const PolyVector tangent = derivative(c);
  const GroupElement rho = es(tangent);
  const PolyVector reduced = apply_group(rho.inverse(), tangent);
  Completion inner = minimal_matrix_completion(reduced);
  return {apply_group(rho, inner.M), rho, reduced, inner.bezout_degree};
}

}  // namespace affine_frames
