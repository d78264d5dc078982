#pragma once

// Polyline models of closed curves on T^2 (lifted: last vertex = first +
// integer vector) and of boundary-to-boundary arcs in the annulus cover
// R x [0,1]. Refinement subdivides segments below a target length; the
// shipped lifts are affine, so vertexwise images are exact and refinement
// only matters for nonlinear user-supplied maps.

#include <stdexcept>
#include <string>
#include <vector>

#include "disto/geometry.hpp"
#include "disto/lift.hpp"

namespace disto {

struct DegenerateCurve : std::runtime_error {
  explicit DegenerateCurve(const std::string& what) : std::runtime_error(what) {}
};

struct PolyCurve {
  std::vector<Vec2> verts;  // for closed curves, verts.back() = verts.front() + (m1,m2)
  bool closed = true;

  // Checks consecutive-vertex distinctness and, for closed curves, that
  // the closure offset is an integer vector.
  void validate() const;

  Vec2 closure_offset() const { return verts.back() - verts.front(); }
};

// One-period Euclidean length in the flat metric.
double curve_length(const PolyCurve& c);

// Subdivide every segment to length <= max_seg (vertices preserved).
PolyCurve refine(const PolyCurve& c, double max_seg);

// Subdivide, then apply the lift vertexwise.
PolyCurve iterate_refine(const Lift& lift, const PolyCurve& c, double max_seg);

struct Arc {
  std::vector<Vec2> pts;

  // Interior must stay in 0 <= y <= 1.
  void validate() const;
};

double arc_length(const Arc& a);
Arc refine(const Arc& a, double max_seg);
Arc apply_refine(const Lift& lift, const Arc& a, double max_seg);

// Named curves for the CLI registry: "e1" (1,0)-loop, "e2" (0,1)-loop,
// "diag" (1,1)-loop.
PolyCurve make_curve(const std::string& name);

// Named arcs: "vertical" = {0} x [0,1].
Arc make_arc(const std::string& name);

}  // namespace disto
