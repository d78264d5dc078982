#include "disto/growth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace disto {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double cross(Vec2 u, Vec2 v) { return u.x * v.y - u.y * v.x; }

bool point_on_segment(Vec2 p, Vec2 a, Vec2 b) {
  if (cross(b - a, p - a) != 0.0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// Closed-convention segment intersection: shared endpoints and tangential
// touches count, matching set-intersection semantics.
bool segments_meet(Vec2 p1, Vec2 p2, Vec2 q1, Vec2 q2) {
  const double d1 = cross(q2 - q1, p1 - q1);
  const double d2 = cross(q2 - q1, p2 - q1);
  const double d3 = cross(p2 - p1, q1 - p1);
  const double d4 = cross(p2 - p1, q2 - p1);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
      ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
    return true;
  if (d1 == 0.0 && point_on_segment(p1, q1, q2)) return true;
  if (d2 == 0.0 && point_on_segment(p2, q1, q2)) return true;
  if (d3 == 0.0 && point_on_segment(q1, p1, p2)) return true;
  if (d4 == 0.0 && point_on_segment(q2, p1, p2)) return true;
  return false;
}

bool arc_meets_polyline(const Arc& arc, const std::vector<Vec2>& poly, double shift) {
  for (std::size_t i = 0; i + 1 < arc.pts.size(); ++i)
    for (std::size_t j = 0; j + 1 < poly.size(); ++j)
      if (segments_meet(arc.pts[i], arc.pts[i + 1], {poly[j].x + shift, poly[j].y},
                        {poly[j + 1].x + shift, poly[j + 1].y}))
        return true;
  return false;
}

long crossing_L_from_met_range(bool any, long lo, long hi) {
  if (!any) return 0;
  // a = lo - 1, b = hi + 1, L = max{0, b - a - 2}
  return std::max<long>(0, hi - lo);
}

}  // namespace

std::vector<GrowthRow> egr(const Lift& lift, const PolyCurve& curve, int n_max,
                           double max_seg, double length_cap) {
  if (n_max < 4) throw std::invalid_argument("egr: n_max >= 4");
  const int env_start = std::max(1, n_max / 2);

  std::vector<GrowthRow> rows;
  rows.reserve(static_cast<std::size_t>(n_max));
  double env = std::numeric_limits<double>::infinity();
  PolyCurve cur = curve;
  for (int n = 1; n <= n_max; ++n) {
    cur = iterate_refine(lift, cur, max_seg);
    const double len = curve_length(cur);
    if (len > length_cap) throw LengthOverflow(n, length_cap);
    GrowthRow row;
    row.n = n;
    row.measure = len;
    row.value = std::log(len) / n;
    if (n >= env_start) {
      env = std::min(env, row.value);
      row.envelope = env;
    } else {
      row.envelope = kNaN;
    }
    rows.push_back(row);
  }
  return rows;
}

long crossing_count_L(const Arc& arc) {
  arc.validate();
  double xmin = arc.pts.front().x, xmax = xmin;
  for (const Vec2& p : arc.pts) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
  }
  const long lo = static_cast<long>(std::ceil(xmin));
  const long hi = static_cast<long>(std::floor(xmax));
  return crossing_L_from_met_range(lo <= hi, lo, hi);
}

long transversal_crossing_L(const Arc& arc, const std::vector<Vec2>& gamma) {
  arc.validate();
  if (gamma.size() < 2)
    throw std::invalid_argument("transversal_crossing_L: gamma needs >= 2 vertices");

  double axmin = arc.pts.front().x, axmax = axmin;
  for (const Vec2& p : arc.pts) {
    axmin = std::min(axmin, p.x);
    axmax = std::max(axmax, p.x);
  }
  double gxmin = gamma.front().x, gxmax = gxmin;
  for (const Vec2& p : gamma) {
    gxmin = std::min(gxmin, p.x);
    gxmax = std::max(gxmax, p.x);
  }

  const long first = static_cast<long>(std::floor(axmin - gxmax)) - 1;
  const long last = static_cast<long>(std::ceil(axmax - gxmin)) + 1;
  bool any = false;
  long lo = 0, hi = 0;
  for (long i = first; i <= last; ++i) {
    if (!arc_meets_polyline(arc, gamma, static_cast<double>(i))) continue;
    if (!any) {
      any = true;
      lo = hi = i;
    } else {
      lo = std::min(lo, i);
      hi = std::max(hi, i);
    }
  }
  return crossing_L_from_met_range(any, lo, hi);
}

std::vector<GrowthRow> spread(const Lift& lift, const Arc& arc, int n_max, double max_seg) {
  if (n_max < 1) throw std::invalid_argument("spread: n_max >= 1");
  if (lift.space != CoverSpace::Annulus)
    throw std::invalid_argument("spread: annulus lift required");
  require_equivariant(lift);

  std::vector<GrowthRow> rows;
  rows.reserve(static_cast<std::size_t>(n_max));
  double env = std::numeric_limits<double>::infinity();
  Arc cur = arc;
  for (int n = 1; n <= n_max; ++n) {
    cur = apply_refine(lift, cur, max_seg);
    GrowthRow row;
    row.n = n;
    row.measure = static_cast<double>(crossing_count_L(cur));
    row.value = row.measure / n;
    env = std::min(env, row.value);
    row.envelope = env;
    rows.push_back(row);
  }
  return rows;
}

GammaIndependenceReport gamma_independence_check(const std::vector<Arc>& arcs,
                                                 const std::vector<Vec2>& gamma_prime,
                                                 int J) {
  if (J < 0) throw std::invalid_argument("gamma_independence_check: J >= 0");
  GammaIndependenceReport report;
  report.ok = true;
  for (const Arc& a : arcs) {
    const long l_std = crossing_count_L(a);
    const long l_alt = transversal_crossing_L(a, gamma_prime);
    const long delta = std::labs(l_alt - l_std);
    report.max_abs_delta = std::max(report.max_abs_delta, delta);
    if (delta > 2L * J) report.ok = false;
  }
  return report;
}

TlenGrowthReport tlen_growth_check(const std::vector<std::pair<Lift, Lift>>& generators,
                                   const Arc& arc, const std::vector<Word>& words,
                                   double max_seg) {
  if (generators.empty()) throw std::invalid_argument("tlen_growth_check: no generators");
  const Vec2 kEndpoints[2] = {{0.0, 0.0}, {0.0, 1.0}};
  for (const auto& [fwd, inv] : generators) {
    require_equivariant(fwd);
    require_equivariant(inv);
    for (Vec2 e : kEndpoints) {
      Vec2 img = fwd(e);
      if (std::fabs(img.x - std::round(img.x)) > 1e-9 || std::fabs(img.y - e.y) > 1e-9)
        throw std::invalid_argument("tlen_growth_check: generator '" + fwd.spec +
                                    "' does not fix the transversal endpoints mod deck");
    }
  }

  const long l0 = crossing_count_L(arc);
  auto apply_word = [&](const Word& w) {
    Arc cur = arc;
    for (const Token& t : w.tokens) {
      if (t.gen < 0 || static_cast<std::size_t>(t.gen) >= generators.size())
        throw std::out_of_range("tlen_growth_check: generator index out of range");
      const auto& pair = generators[static_cast<std::size_t>(t.gen)];
      cur = apply_refine(t.sgn >= 0 ? pair.first : pair.second, cur, max_seg);
    }
    return cur;
  };

  TlenGrowthReport report;
  // Per-letter increments over single generators set the budget.
  for (std::size_t g = 0; g < generators.size(); ++g) {
    for (int sgn : {+1, -1}) {
      Word w;
      w.append(static_cast<int>(g), sgn);
      const long inc = crossing_count_L(apply_word(w)) - l0;
      report.c_single = std::max(report.c_single, static_cast<double>(inc));
    }
  }

  report.pass = true;
  for (const Word& w : words) {
    if (w.token_count() == 0) continue;
    const long inc = crossing_count_L(apply_word(w)) - l0;
    const double ratio = static_cast<double>(inc) / static_cast<double>(w.token_count());
    report.c_hat = std::max(report.c_hat, ratio);
    if (static_cast<double>(inc) >
        report.c_single * static_cast<double>(w.token_count()) + 1e-12)
      report.pass = false;
  }
  report.c_hat = std::max(report.c_hat, report.c_single);
  return report;
}

}  // namespace disto
