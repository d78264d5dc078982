#pragma once

// Rotation vectors and numbers from lifted orbit averages, the
// projectivized RP^1 action of a positive-determinant matrix, and the
// mean rotation vector against an empirical measure.

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "disto/geometry.hpp"
#include "disto/lift.hpp"

namespace disto {

struct MonotonicityViolation : std::runtime_error {
  explicit MonotonicityViolation(const std::string& what) : std::runtime_error(what) {}
};

struct SingularMatrix : std::runtime_error {
  explicit SingularMatrix(const std::string& what) : std::runtime_error(what) {}
};

struct NonConvergentSample : std::runtime_error {
  std::vector<Vec2> offending;
  NonConvergentSample(const std::string& what, std::vector<Vec2> points)
      : std::runtime_error(what), offending(std::move(points)) {}
};

struct RotationReport {
  Vec2 estimate{};               // (F^n(x) - x)/n
  double window_variation = 0.0; // sup-norm diameter of the last-quarter partial averages
  int n_used = 0;
  bool converged = false;        // window_variation < tol
};

// Orbit-average rotation vector of the lifted orbit of x. The lift is
// checked against its own deck contract first (EquivarianceViolation).
RotationReport rotation_vector(const Lift& lift, Vec2 x, int n, double tol = 1e-3);

// (F^n(x) - x)/n for a monotone circle lift; within 2/n of the true
// rotation number for every x. MonotonicityViolation if sampled F
// decreases somewhere.
double rotation_number_circle(const Lift& lift, double x, int n);

// Lift of the RP^1 action of M (det > 0) in the parameter u = angle/pi,
// anchored so the image of 0 lies in (-1/2, 1/2].
Lift projectivized_circle_map(const std::array<double, 4>& m);

struct EmpiricalMeasure {
  std::vector<std::pair<Vec2, double>> points;  // (support point, weight >= 0)

  // Total mass must be 1 within 1e-12.
  void validate() const;
};

// Weight-averaged rotation vector; every sample point must converge per
// rotation_vector, else NonConvergentSample listing the offenders.
Vec2 mean_rotation_vector(const Lift& lift, const EmpiricalMeasure& mu, int n,
                          double tol = 1e-3);

}  // namespace disto
