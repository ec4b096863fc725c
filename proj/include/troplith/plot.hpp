#pragma once

// SVG rendering of cycles in R^2.  Unbounded cells are clipped exactly to a
// rational bounding box; coordinates are printed as decimals rounded from
// exact rationals, so output is byte-stable.

#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "troplith/cycle.hpp"
#include "troplith/errors.hpp"
#include "troplith/exact_arith.hpp"

namespace troplith {

struct BoundingBox {
  Rational xmin, ymin, xmax, ymax;
};

/// Vertex hull padded by 2 in each direction.
inline BoundingBox default_bbox(const TropicalCycle& X) {
  BoundingBox b{0, 0, 0, 0};
  bool first = true;
  for (const auto& c : X.cells())
    for (const auto& v : c.cell.vertices()) {
      if (first) {
        b = {v[0], v[1], v[0], v[1]};
        first = false;
      }
      b.xmin = std::min(b.xmin, v[0]);
      b.ymin = std::min(b.ymin, v[1]);
      b.xmax = std::max(b.xmax, v[0]);
      b.ymax = std::max(b.ymax, v[1]);
    }
  b.xmin -= 2;
  b.ymin -= 2;
  b.xmax += 2;
  b.ymax += 2;
  return b;
}

namespace detail {

/// p + t d for t in [lo, hi] (nullopt = unbounded) clipped to the box.
inline std::optional<std::pair<QVec, QVec>> clip(const QVec& p, const QVec& d, std::optional<Rational> lo,
                                                 std::optional<Rational> hi, const BoundingBox& b) {
  const Rational mins[2] = {b.xmin, b.ymin}, maxs[2] = {b.xmax, b.ymax};
  for (int i = 0; i < 2; ++i) {
    if (d[i] == 0) {
      if (p[i] < mins[i] || p[i] > maxs[i]) return std::nullopt;
      continue;
    }
    Rational t1 = (mins[i] - p[i]) / d[i], t2 = (maxs[i] - p[i]) / d[i];
    if (t1 > t2) std::swap(t1, t2);
    if (!lo || *lo < t1) lo = t1;
    if (!hi || *hi > t2) hi = t2;
  }
  if (!lo || !hi || *lo > *hi) return std::nullopt;
  return std::make_pair(add_vec(p, scale_vec(d, *lo)), add_vec(p, scale_vec(d, *hi)));
}

/// Decimal string of q rounded to three places.
inline std::string decimal(const Rational& q) {
  Integer scaled = floor_div(num(q) * 2000 + den(q), 2 * den(q));  // round half up of q * 1000
  std::string sign = scaled < 0 ? "-" : "";
  Integer a = abs_int(scaled);
  std::string frac = Integer(a % 1000).str();
  while (frac.size() < 3) frac = "0" + frac;
  return sign + Integer(a / 1000).str() + "." + frac;
}

}  // namespace detail

/// SVG of a curve or point set in R^2; weights as labels, negative weights dashed.
inline std::string plot_svg(const TropicalCycle& X, const std::optional<BoundingBox>& box = std::nullopt) {
  require(X.ambient_dim() == 2, ErrorCode::Unsupported, "plot: only ambient dimension 2 is supported");
  require(X.dim() <= 1, ErrorCode::Unsupported, "plot: only points and curves are supported");
  const BoundingBox b = box ? *box : default_bbox(X);
  require(b.xmin < b.xmax && b.ymin < b.ymax, ErrorCode::InvalidArgument, "plot: empty bounding box");
  const Rational scale = Rational(600) / std::max(b.xmax - b.xmin, b.ymax - b.ymin);
  auto sx = [&](const Rational& x) { return detail::decimal((x - b.xmin) * scale + 20); };
  auto sy = [&](const Rational& y) { return detail::decimal((b.ymax - y) * scale + 20); };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << detail::decimal((b.xmax - b.xmin) * scale + 40)
     << "\" height=\"" << detail::decimal((b.ymax - b.ymin) * scale + 40) << "\">\n";
  os << "<rect x=\"20\" y=\"20\" width=\"" << detail::decimal((b.xmax - b.xmin) * scale) << "\" height=\""
     << detail::decimal((b.ymax - b.ymin) * scale) << "\" fill=\"none\" stroke=\"#cccccc\"/>\n";
  for (const auto& c : X.cells()) {
    const Polyhedron& P = c.cell;
    const std::string style = c.weight < 0 ? " stroke-dasharray=\"6,4\"" : "";
    if (P.dim() == 0) {
      const QVec& v = P.vertices().front();
      if (v[0] < b.xmin || v[0] > b.xmax || v[1] < b.ymin || v[1] > b.ymax) continue;
      os << "<circle cx=\"" << sx(v[0]) << "\" cy=\"" << sy(v[1]) << "\" r=\"4\" fill=\"black\"/>\n";
      os << "<text x=\"" << sx(v[0]) << "\" y=\"" << sy(v[1]) << "\" dx=\"6\" dy=\"-6\" font-size=\"12\">" << c.weight
         << "</text>\n";
      continue;
    }
    std::optional<std::pair<QVec, QVec>> seg;
    if (P.vertices().size() == 2)
      seg = detail::clip(P.vertices()[0], sub_vec(P.vertices()[1], P.vertices()[0]), Rational(0), Rational(1), b);
    else if (!P.rays().empty())
      seg = detail::clip(P.vertices()[0], to_q(P.rays()[0]), Rational(0), std::nullopt, b);
    else
      seg = detail::clip(P.vertices()[0], to_q(P.lineality()[0]), std::nullopt, std::nullopt, b);
    if (!seg) continue;
    const auto& [a, e] = *seg;
    os << "<line x1=\"" << sx(a[0]) << "\" y1=\"" << sy(a[1]) << "\" x2=\"" << sx(e[0]) << "\" y2=\"" << sy(e[1])
       << "\" stroke=\"black\" stroke-width=\"2\"" << style << "/>\n";
    const QVec mid = scale_vec(add_vec(a, e), Rational(1, 2));
    os << "<text x=\"" << sx(mid[0]) << "\" y=\"" << sy(mid[1]) << "\" dx=\"4\" dy=\"-4\" font-size=\"12\">" << c.weight
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace troplith
