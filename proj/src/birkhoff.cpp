#include "disto/birkhoff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace disto {

std::optional<FirstReturn> first_return(const Lift& lift, const RegionIndicator& region,
                                        Vec2 x, int max_steps) {
  if (max_steps < 1) throw std::invalid_argument("first_return: max_steps >= 1");
  Vec2 p = x;
  for (int k = 1; k <= max_steps; ++k) {
    p = lift(p);
    Vec2 r = reduce_to_fundamental(lift.space, p);
    if (region(r)) return FirstReturn{p, r, k};
  }
  return std::nullopt;
}

double birkhoff_displacement_sum(const Lift& lift, const RegionIndicator& region, Vec2 x,
                                 int n, int max_steps_per_return) {
  if (n < 0) throw std::invalid_argument("birkhoff_displacement_sum: n >= 0");
  Vec2 p = x;
  for (int i = 0; i < n; ++i) {
    auto ret = first_return(lift, region, p, max_steps_per_return);
    if (!ret) throw NoReturnError(i, max_steps_per_return);
    p = ret->lifted;
  }
  return p.x - x.x;
}

std::vector<int> recurrence_witnesses(const Lift& lift, const RegionIndicator& region, Vec2 x,
                                      int N, double bound, int max_steps_per_return) {
  if (bound <= 0.0) throw std::invalid_argument("recurrence_witnesses: bound > 0");
  std::vector<int> witnesses;
  Vec2 p = x;
  for (int n = 1; n <= N; ++n) {
    auto ret = first_return(lift, region, p, max_steps_per_return);
    if (!ret) throw NoReturnError(n - 1, max_steps_per_return);
    p = ret->lifted;
    if (std::fabs(p.x - x.x) < bound) witnesses.push_back(n);
  }
  return witnesses;
}

std::vector<Vec2> interior_fixed_point_search(const Lift& lift, int grid_resolution,
                                              double tol) {
  if (lift.space != CoverSpace::Annulus)
    throw std::invalid_argument("interior_fixed_point_search: annulus lift required");
  if (grid_resolution < 2) throw std::invalid_argument("interior_fixed_point_search: grid >= 2");
  require_equivariant(lift);

  const double h = 1.0 / grid_resolution;
  auto displacement = [&](Vec2 p) { return (lift(p) - p).norm(); };

  std::vector<Vec2> candidates;
  for (int i = 0; i < grid_resolution; ++i) {
    for (int j = 0; j < grid_resolution; ++j) {
      Vec2 center{(i + 0.5) * h, (j + 0.5) * h};
      // Coarse cull with one cell of slack, then one bisection refinement.
      if (displacement(center) >= tol + h) continue;
      for (int di = 0; di < 2; ++di) {
        for (int dj = 0; dj < 2; ++dj) {
          Vec2 sub{center.x + (di == 0 ? -0.25 : 0.25) * h,
                   center.y + (dj == 0 ? -0.25 : 0.25) * h};
          if (displacement(sub) < tol) candidates.push_back(sub);
        }
      }
    }
  }
  return candidates;
}

RatioSeries linear_displacement_detector(const Lift& lift, Vec2 x1, Vec2 x2, int n_max) {
  if (n_max < 1) throw std::invalid_argument("linear_displacement_detector: n_max >= 1");
  RatioSeries series;
  series.values.reserve(static_cast<std::size_t>(n_max));
  series.envelope.reserve(static_cast<std::size_t>(n_max));
  double env = std::numeric_limits<double>::infinity();
  Vec2 p1 = x1, p2 = x2;
  for (int n = 1; n <= n_max; ++n) {
    p1 = lift(p1);
    p2 = lift(p2);
    double ratio = dist(p1, p2) / n;
    env = std::min(env, ratio);
    series.values.push_back(ratio);
    series.envelope.push_back(env);
  }
  return series;
}

}  // namespace disto
