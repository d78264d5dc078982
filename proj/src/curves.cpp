#include "disto/curves.hpp"

#include <cmath>

#include "disto/lift.hpp"

namespace disto {

namespace {

std::vector<Vec2> refine_polyline(const std::vector<Vec2>& pts, double max_seg) {
  if (max_seg <= 0.0) throw std::invalid_argument("refine: max_seg > 0");
  std::vector<Vec2> out;
  out.reserve(pts.size());
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const Vec2 a = pts[i], b = pts[i + 1];
    const double len = dist(a, b);
    const int pieces = std::max(1, static_cast<int>(std::ceil(len / max_seg)));
    for (int k = 0; k < pieces; ++k) {
      double t = static_cast<double>(k) / pieces;
      out.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
    }
  }
  out.push_back(pts.back());
  return out;
}

std::vector<Vec2> map_polyline(const Lift& lift, const std::vector<Vec2>& pts) {
  std::vector<Vec2> out;
  out.reserve(pts.size());
  for (Vec2 p : pts) out.push_back(lift(p));
  return out;
}

double polyline_length(const std::vector<Vec2>& pts) {
  double len = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) len += dist(pts[i], pts[i + 1]);
  return len;
}

}  // namespace

void PolyCurve::validate() const {
  if (verts.size() < 2) throw DegenerateCurve("curve needs at least two vertices");
  for (std::size_t i = 0; i + 1 < verts.size(); ++i)
    if (verts[i] == verts[i + 1])
      throw DegenerateCurve("consecutive vertices coincide at index " + std::to_string(i));
  if (closed) {
    Vec2 off = closure_offset();
    if (std::fabs(off.x - std::round(off.x)) > 1e-9 ||
        std::fabs(off.y - std::round(off.y)) > 1e-9)
      throw DegenerateCurve("closure offset is not an integer vector");
  }
}

double curve_length(const PolyCurve& c) {
  c.validate();
  return polyline_length(c.verts);
}

PolyCurve refine(const PolyCurve& c, double max_seg) {
  c.validate();
  return PolyCurve{refine_polyline(c.verts, max_seg), c.closed};
}

PolyCurve iterate_refine(const Lift& lift, const PolyCurve& c, double max_seg) {
  PolyCurve fine = refine(c, max_seg);
  return PolyCurve{map_polyline(lift, fine.verts), c.closed};
}

void Arc::validate() const {
  if (pts.size() < 2) throw DegenerateCurve("arc needs at least two vertices");
  for (const Vec2& p : pts)
    if (p.y < -1e-9 || p.y > 1.0 + 1e-9)
      throw DegenerateCurve("arc leaves the annulus band 0 <= y <= 1");
}

double arc_length(const Arc& a) {
  a.validate();
  return polyline_length(a.pts);
}

Arc refine(const Arc& a, double max_seg) {
  a.validate();
  return Arc{refine_polyline(a.pts, max_seg)};
}

Arc apply_refine(const Lift& lift, const Arc& a, double max_seg) {
  Arc fine = refine(a, max_seg);
  return Arc{map_polyline(lift, fine.pts)};
}

PolyCurve make_curve(const std::string& name) {
  if (name == "e1") return PolyCurve{{{0, 0}, {1, 0}}, true};
  if (name == "e2") return PolyCurve{{{0, 0}, {0, 1}}, true};
  if (name == "diag") return PolyCurve{{{0, 0}, {1, 1}}, true};
  throw UnknownRegistryName("curve '" + name + "'");
}

Arc make_arc(const std::string& name) {
  if (name == "vertical") return Arc{{{0, 0}, {0, 1}}};
  throw UnknownRegistryName("arc '" + name + "'");
}

}  // namespace disto
