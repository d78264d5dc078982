#include "disto/rotation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace disto {

RotationReport rotation_vector(const Lift& lift, Vec2 x, int n, double tol) {
  if (n < 16) throw std::invalid_argument("rotation_vector: n >= 16");
  require_equivariant(lift);

  const int window_start = n - n / 4 + 1;
  Vec2 p = x;
  Vec2 lo{0, 0}, hi{0, 0};
  bool window_open = false;
  for (int k = 1; k <= n; ++k) {
    p = lift(p);
    if (k >= window_start) {
      Vec2 avg = (p - x) / static_cast<double>(k);
      if (!window_open) {
        lo = hi = avg;
        window_open = true;
      } else {
        lo = {std::min(lo.x, avg.x), std::min(lo.y, avg.y)};
        hi = {std::max(hi.x, avg.x), std::max(hi.y, avg.y)};
      }
    }
  }

  RotationReport report;
  report.estimate = (p - x) / static_cast<double>(n);
  report.window_variation = (hi - lo).sup_norm();
  report.n_used = n;
  report.converged = report.window_variation < tol;
  return report;
}

double rotation_number_circle(const Lift& lift, double x, int n) {
  if (lift.space != CoverSpace::Circle)
    throw std::invalid_argument("rotation_number_circle: circle lift required");
  if (n < 1) throw std::invalid_argument("rotation_number_circle: n >= 1");
  require_equivariant(lift);

  constexpr int kSamples = 256;
  double prev = lift({0.0, 0.0}).x;
  for (int i = 1; i <= kSamples; ++i) {
    double cur = lift({static_cast<double>(i) / kSamples, 0.0}).x;
    if (cur < prev - 1e-12)
      throw MonotonicityViolation("rotation_number_circle: lift '" + lift.spec +
                                  "' decreases near x = " + std::to_string(double(i) / kSamples));
    prev = cur;
  }

  double p = x;
  for (int k = 0; k < n; ++k) p = lift({p, 0.0}).x;
  return (p - x) / n;
}

Lift projectivized_circle_map(const std::array<double, 4>& m) {
  const double det = m[0] * m[3] - m[1] * m[2];
  if (!(det > 1e-12))
    throw SingularMatrix("projectivized_circle_map: det = " + std::to_string(det));

  // Direction angle of M(cos(pi u), sin(pi u)) in units of pi, folded to
  // [0,1) (RP^1 identifies antipodes). Monotone of degree one since
  // det > 0, so the lift is
  //   g(u) = floor(u) + a0 + ((raw(u mod 1) - raw(0)) mod 1),
  // with the anchor a0 = principal value of raw angle at 0 in (-1/2, 1/2].
  auto raw = [m](double u) {
    const double th = std::numbers::pi * u;
    const double vx = m[0] * std::cos(th) + m[1] * std::sin(th);
    const double vy = m[2] * std::cos(th) + m[3] * std::sin(th);
    double a = std::atan2(vy, vx) / std::numbers::pi;  // in (-1, 1]
    a -= std::floor(a);                                // fold to [0, 1)
    return a;
  };
  const double raw0 = raw(0.0);
  double anchor = raw0;
  if (anchor > 0.5) anchor -= 1.0;  // (-1/2, 1/2]

  Lift l;
  l.space = CoverSpace::Circle;
  l.spec = "projmat:" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "," +
           std::to_string(m[2]) + "," + std::to_string(m[3]);
  l.map = [raw, raw0, anchor](Vec2 p) {
    const double base = std::floor(p.x);
    const double frac = p.x - base;
    double delta = raw(frac) - raw0;
    delta -= std::floor(delta);  // mod 1
    return Vec2{base + anchor + delta, 0.0};
  };
  return l;
}

void EmpiricalMeasure::validate() const {
  double mass = 0.0;
  for (const auto& [pt, w] : points) {
    if (w < 0.0) throw std::invalid_argument("EmpiricalMeasure: negative weight");
    mass += w;
  }
  if (std::fabs(mass - 1.0) > 1e-12)
    throw std::invalid_argument("EmpiricalMeasure: total mass " + std::to_string(mass));
}

Vec2 mean_rotation_vector(const Lift& lift, const EmpiricalMeasure& mu, int n, double tol) {
  mu.validate();
  Vec2 acc{0, 0};
  std::vector<Vec2> bad;
  for (const auto& [pt, w] : mu.points) {
    RotationReport r = rotation_vector(lift, pt, n, tol);
    if (!r.converged) {
      bad.push_back(pt);
      continue;
    }
    acc = acc + w * r.estimate;
  }
  if (!bad.empty())
    throw NonConvergentSample("mean_rotation_vector: " + std::to_string(bad.size()) +
                                  " sample point(s) did not converge",
                              std::move(bad));
  return acc;
}

}  // namespace disto
