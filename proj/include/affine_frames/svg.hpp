#pragma once

#include "affine_frames/documents.hpp"

#include <string>
#include <vector>

namespace affine_frames {

struct PlotOptions {
  /// Parameter values at which frame arrows are drawn; must be non-empty.
  std::vector<Rational> params;
  /// 0-based projection axes; distinct and < n.
  std::size_t axis_x = 0;
  std::size_t axis_y = 1;
  std::size_t samples = 200;
};

/// SVG 1.1 figure of the projected curve with the columns of F drawn as
/// arrows at each parameter. Points are computed exactly and only converted
/// to double when written out. All arrows share one scale factor.
/// Throws DimensionMismatch when `frame` is not a frame result for `curve`
/// and std::invalid_argument on bad options.
std::string plot_svg(const CurveDocument& curve, const ResultDocument& frame, const PlotOptions& options);

}  // namespace affine_frames
