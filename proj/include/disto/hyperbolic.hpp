#pragma once

// Hyperbolic-plane primitives in the upper half-plane model: isometry
// classification by trace, axes of hyperbolic elements (ordered source to
// sink on the boundary R u {inf}), translation length, the T-equivariant
// projection onto an axis normalized so the deck map acts as x -> x+1,
// and the linear-tracing envelope |p(h^n z) - p(z)|/n.

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>

#include "disto/birkhoff.hpp"  // RatioSeries

namespace disto {

struct WrongType : std::runtime_error {
  explicit WrongType(const std::string& what) : std::runtime_error(what) {}
};

struct CommutationViolation : std::runtime_error {
  explicit CommutationViolation(const std::string& what) : std::runtime_error(what) {}
};

enum class MobiusType { Elliptic, Parabolic, Hyperbolic };

struct Mobius {
  // det-normalized to 1; construction rejects det <= 0 (orientation must
  // be preserved for an upper half-plane isometry).
  double a = 1, b = 0, c = 0, d = 1;

  static Mobius from_matrix(double a, double b, double c, double d);

  std::complex<double> apply(std::complex<double> z) const;

  friend Mobius operator*(const Mobius& m, const Mobius& n) {
    return Mobius{m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                  m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
  }
  Mobius inverse() const { return Mobius{d, -b, -c, a}; }

  double trace() const { return a + d; }
};

MobiusType mobius_classify(const Mobius& m, double parabolic_tol = 1e-12);

struct AxisEndpoints {
  double source = 0.0;  // repelling boundary fixed point (may be +-inf)
  double sink = 0.0;    // attracting boundary fixed point
};

// Fixed points of a hyperbolic element on the boundary, ordered source to
// sink. WrongType for elliptic/parabolic input.
AxisEndpoints axis_endpoints(const Mobius& m);

// 2 arccosh(|tr|/2); the hyperbolic displacement along the axis.
double translation_length_hyp(const Mobius& m);

// Orthogonal projection of H onto the axis of T, parametrized so that T
// acts as x -> x + 1. p(Tz) = p(z) + 1 holds to machine accuracy.
class EquivariantProjection {
 public:
  explicit EquivariantProjection(const Mobius& deck);

  double operator()(std::complex<double> z) const;

  const AxisEndpoints& axis() const { return axis_; }
  double deck_translation_length() const { return ell_; }

 private:
  AxisEndpoints axis_;
  double ell_;
};

using PlaneMap = std::function<std::complex<double>(std::complex<double>)>;

inline PlaneMap mobius_map(const Mobius& m) {
  return [m](std::complex<double> z) { return m.apply(z); };
}

// Ratio envelope |p(h^n z) - p(z)|/n for a lift h commuting with the deck
// map T; a positive limit is evidence of linear tracing. Commutation is
// checked on sample points to 1e-9 (CommutationViolation).
RatioSeries linear_tracing_estimate(const PlaneMap& h, const Mobius& deck,
                                    std::complex<double> z, int n_max);

// T-equivariant twist supported on the hyperbolic balls of radius
// `radius` about the deck orbit of `center` (which should sit on the axis
// of T): inside each ball, rotate about the orbit point by an angle that
// tapers to zero at the ball boundary; identity elsewhere. Commutes with
// T by construction, and its orbits stay inside one ball, so it traces
// nothing.
PlaneMap make_equivariant_twist(const Mobius& deck, std::complex<double> center,
                                double radius, double angle);

}  // namespace disto
