#include "affine_frames/svg.hpp"

#include "affine_frames/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace affine_frames {
namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 480;
constexpr double kMargin = 24;

struct Point {
  double x;
  double y;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  std::string s(buf);
  return s == "-0.000" ? "0.000" : s;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

struct Box {
  double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  bool empty = true;
  void add(Point p) {
    if (empty) {
      x0 = x1 = p.x;
      y0 = y1 = p.y;
      empty = false;
      return;
    }
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
};

}  // namespace

std::string plot_svg(const CurveDocument& curve, const ResultDocument& frame, const PlotOptions& options) {
  if (options.params.empty()) throw std::invalid_argument("empty parameter list");
  if (curve.n < 2) throw std::invalid_argument("plot needs n >= 2");
  if (options.axis_x == options.axis_y || options.axis_x >= curve.n || options.axis_y >= curve.n) {
    throw std::invalid_argument("projection axes must be distinct and < n");
  }
  if (options.samples < 2) throw std::invalid_argument("need at least two samples");
  if (frame.kind != ResultKind::frame) throw DimensionMismatch("plot needs a frame result document");
  const PolyVector c = curve.to_vector();
  if (frame.input.n != curve.n || frame.input.to_vector() != c) {
    throw DimensionMismatch("frame document was computed for a different curve");
  }
  const PolyMatrix F = decode_poly_matrix(frame.payload.at("F"), "payload.F");
  if (F.rows() != curve.n || F.cols() != curve.n) throw DimensionMismatch("frame matrix is not n x n");

  const auto [lo_it, hi_it] = std::minmax_element(options.params.begin(), options.params.end());
  const Rational span = *hi_it - *lo_it;
  const Rational pad = span == 0 ? Rational(1) : Rational(span / 4);
  const Rational lo = *lo_it - pad;
  const Rational step = (*hi_it + pad - lo) / static_cast<long>(options.samples - 1);

  auto project = [&](const std::vector<Rational>& p) {
    return Point{p[options.axis_x].get_d(), p[options.axis_y].get_d()};
  };

  Box box;
  std::vector<Point> polyline;
  for (std::size_t i = 0; i < options.samples; ++i) {
    const Point p = project(c.evaluate(lo + step * static_cast<long>(i)));
    polyline.push_back(p);
    box.add(p);
  }

  struct Arrow {
    Point base;
    Point dir;
  };
  std::vector<std::vector<Arrow>> arrows;
  double longest = 0;
  for (const auto& t : options.params) {
    const Point base = project(c.evaluate(t));
    box.add(base);
    const RatMatrix Ft = F.evaluate(t);
    std::vector<Arrow> at;
    for (std::size_t j = 0; j < curve.n; ++j) {
      const Point dir = project(Ft.column(j));
      longest = std::max(longest, std::hypot(dir.x, dir.y));
      at.push_back({base, dir});
    }
    arrows.push_back(std::move(at));
  }

  double diag = std::hypot(box.x1 - box.x0, box.y1 - box.y0);
  if (diag == 0) diag = 1;
  const double scale = longest > 0 ? 0.25 * diag / longest : 1;
  for (const auto& at : arrows) {
    for (const auto& a : at) box.add({a.base.x + scale * a.dir.x, a.base.y + scale * a.dir.y});
  }

  const double w = std::max(box.x1 - box.x0, 1e-12);
  const double h = std::max(box.y1 - box.y0, 1e-12);
  const double k = std::min((kWidth - 2 * kMargin) / w, (kHeight - 2 * kMargin) / h);
  auto sx = [&](double x) { return kMargin + (x - box.x0) * k; };
  auto sy = [&](double y) { return kHeight - kMargin - (y - box.y0) * k; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
  out << "<title>" << escape(curve.label.value_or("frame along curve")) << "</title>\n";
  out << "<desc>projection axes " << options.axis_x << "," << options.axis_y << "; arrow scale " << fmt(scale)
      << "</desc>\n";
  out << "<defs><marker id=\"arrowhead\" markerWidth=\"8\" markerHeight=\"6\" refX=\"8\" refY=\"3\" "
         "orient=\"auto\"><path d=\"M0,0 L8,3 L0,6 z\"/></marker></defs>\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<polyline class=\"curve\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < polyline.size(); ++i) {
    out << (i ? " " : "") << fmt(sx(polyline[i].x)) << "," << fmt(sy(polyline[i].y));
  }
  out << "\"/>\n";

  static const char* const kColors[] = {"#c0392b", "#2471a3", "#1e8449", "#7d3c98", "#b9770e"};
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    out << "<g class=\"frame\" data-t=\"" << to_string(options.params[i]) << "\">\n";
    const Point b = arrows[i].front().base;
    out << "<circle cx=\"" << fmt(sx(b.x)) << "\" cy=\"" << fmt(sy(b.y)) << "\" r=\"2.5\"/>\n";
    for (std::size_t j = 0; j < arrows[i].size(); ++j) {
      const Arrow& a = arrows[i][j];
      out << "<line class=\"frame-arrow\" data-column=\"" << j + 1 << "\" x1=\"" << fmt(sx(a.base.x)) << "\" y1=\""
          << fmt(sy(a.base.y)) << "\" x2=\"" << fmt(sx(a.base.x + scale * a.dir.x)) << "\" y2=\""
          << fmt(sy(a.base.y + scale * a.dir.y)) << "\" stroke=\"" << kColors[j % 5]
          << "\" stroke-width=\"1.2\" marker-end=\"url(#arrowhead)\"/>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace affine_frames
