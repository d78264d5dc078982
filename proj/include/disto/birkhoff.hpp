#pragma once

// First-return maps, Birkhoff displacement sums S(n,x) accumulated in the
// lifted (unwrapped) first coordinate, recurrence witnesses |S(n,x)| < 1,
// lift fixed-point search on the annulus, and the linear-displacement
// detector for pairs of lifted orbits.

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "disto/geometry.hpp"
#include "disto/lift.hpp"

namespace disto {

// Membership test on the fundamental domain. Boundary conventions
// (half-open edges, tie handling) belong to the indicator, never to the
// library.
using RegionIndicator = std::function<bool(Vec2)>;

struct NoReturnError : std::runtime_error {
  int index;  // which first-return step failed
  NoReturnError(int idx, int max_steps)
      : std::runtime_error("NoReturn: orbit left the region for good at return index " +
                           std::to_string(idx) + " (max_steps " + std::to_string(max_steps) + ")"),
        index(idx) {}
};

struct FirstReturn {
  Vec2 lifted;   // g^k(x) in cover coordinates
  Vec2 reduced;  // its fundamental-domain representative
  int time = 0;  // the return time k
};

// Smallest k >= 1 with g^k(x) back in the region; nullopt after max_steps
// (reported, not fatal). x is given in cover coordinates.
std::optional<FirstReturn> first_return(const Lift& lift, const RegionIndicator& region,
                                        Vec2 x, int max_steps);

// S(n,x): lifted first-coordinate displacement accumulated over n steps of
// the first-return map. Implemented as the telescoped difference
// p1(h^n(x)) - p1(x), which is exactly the sum of the per-return psi's.
double birkhoff_displacement_sum(const Lift& lift, const RegionIndicator& region, Vec2 x,
                                 int n, int max_steps_per_return = 100000);

// All n <= N with |S(n,x)| < bound.
std::vector<int> recurrence_witnesses(const Lift& lift, const RegionIndicator& region, Vec2 x,
                                      int N, double bound = 1.0,
                                      int max_steps_per_return = 100000);

// Grid cells of the annulus fundamental domain whose refined centers move
// less than tol under the lift; one bisection pass per candidate cell.
// Candidates are evidence of lift fixed points (empty list is an answer).
std::vector<Vec2> interior_fixed_point_search(const Lift& lift, int grid_resolution,
                                              double tol);

struct RatioSeries {
  std::vector<double> values;    // per-n ratios, n = 1..n_max
  std::vector<double> envelope;  // running minimum
  double final_envelope() const { return envelope.empty() ? 0.0 : envelope.back(); }
};

// liminf envelope of d(F^n x1, F^n x2)/n in the lifted Euclidean metric.
// A positive envelope at n_max is evidence of linear displacement.
RatioSeries linear_displacement_detector(const Lift& lift, Vec2 x1, Vec2 x2, int n_max);

}  // namespace disto
