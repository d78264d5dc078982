#include "disto/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace disto {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double hyp_dist(std::complex<double> z, std::complex<double> w) {
  const double num = std::norm(z - w);
  const double ch = 1.0 + num / (2.0 * z.imag() * w.imag());
  return std::acosh(std::max(1.0, ch));
}

}  // namespace

Mobius Mobius::from_matrix(double a, double b, double c, double d) {
  const double det = a * d - b * c;
  if (!(det > 0.0))
    throw std::invalid_argument("Mobius: det must be positive (got " + std::to_string(det) + ")");
  const double s = std::sqrt(det);
  return Mobius{a / s, b / s, c / s, d / s};
}

std::complex<double> Mobius::apply(std::complex<double> z) const {
  return (a * z + b) / (c * z + d);
}

MobiusType mobius_classify(const Mobius& m, double parabolic_tol) {
  const double t = std::fabs(m.trace());
  if (std::fabs(t - 2.0) <= parabolic_tol) return MobiusType::Parabolic;
  return t < 2.0 ? MobiusType::Elliptic : MobiusType::Hyperbolic;
}

AxisEndpoints axis_endpoints(const Mobius& m) {
  if (mobius_classify(m) != MobiusType::Hyperbolic)
    throw WrongType("axis_endpoints: element is not hyperbolic (trace " +
                    std::to_string(m.trace()) + ")");

  if (m.c == 0.0) {
    // Fixed points: infinity and b/(d-a). |a| > |d| makes infinity the sink.
    const double finite = m.b / (m.d - m.a);
    if (std::fabs(m.a) > std::fabs(m.d)) return {finite, kInf};
    return {kInf, finite};
  }
  const double disc = m.trace() * m.trace() - 4.0;
  const double root = std::sqrt(disc);
  const double r1 = (m.a - m.d + root) / (2.0 * m.c);
  const double r2 = (m.a - m.d - root) / (2.0 * m.c);
  // Derivative at a fixed point is (c z + d)^-2; the sink is the
  // attracting one, |c z + d| > 1.
  const double s1 = std::fabs(m.c * r1 + m.d);
  if (s1 > 1.0) return {r2, r1};
  return {r1, r2};
}

double translation_length_hyp(const Mobius& m) {
  const double t = std::fabs(m.trace());
  if (t < 2.0)
    throw WrongType("translation_length_hyp: elliptic element has no translation length");
  return 2.0 * std::acosh(t / 2.0);
}

EquivariantProjection::EquivariantProjection(const Mobius& deck)
    : axis_(axis_endpoints(deck)), ell_(translation_length_hyp(deck)) {}

double EquivariantProjection::operator()(std::complex<double> z) const {
  // Conjugate the axis to (0, inf); there the orthogonal projection of z
  // onto the imaginary axis has arclength parameter log|z|, and the deck
  // map scales by e^ell, so dividing by ell normalizes its action to +1.
  double logw;
  if (axis_.sink == kInf) {
    logw = std::log(std::abs(z - axis_.source));
  } else if (axis_.source == kInf) {
    logw = -std::log(std::abs(z - axis_.sink));
  } else {
    logw = std::log(std::abs((z - axis_.source) / (z - axis_.sink)));
  }
  return logw / ell_;
}

RatioSeries linear_tracing_estimate(const PlaneMap& h, const Mobius& deck,
                                    std::complex<double> z, int n_max) {
  if (n_max < 1) throw std::invalid_argument("linear_tracing_estimate: n_max >= 1");

  const PlaneMap t = mobius_map(deck);
  const std::complex<double> samples[] = {{0.0, 1.0}, {1.0, 0.5}, {-0.7, 2.0}, {0.3, 0.7}, z};
  for (std::complex<double> s : samples) {
    const auto lhs = h(t(s));
    const auto rhs = t(h(s));
    if (std::abs(lhs - rhs) > 1e-9)
      throw CommutationViolation("linear_tracing_estimate: h does not commute with the deck map at z = (" +
                                 std::to_string(s.real()) + ", " + std::to_string(s.imag()) + ")");
  }

  const EquivariantProjection proj(deck);
  const double p0 = proj(z);
  RatioSeries series;
  series.values.reserve(static_cast<std::size_t>(n_max));
  series.envelope.reserve(static_cast<std::size_t>(n_max));
  double env = std::numeric_limits<double>::infinity();
  std::complex<double> p = z;
  for (int n = 1; n <= n_max; ++n) {
    p = h(p);
    const double ratio = std::fabs(proj(p) - p0) / n;
    env = std::min(env, ratio);
    series.values.push_back(ratio);
    series.envelope.push_back(env);
  }
  return series;
}

PlaneMap make_equivariant_twist(const Mobius& deck, std::complex<double> center,
                                double radius, double angle) {
  const EquivariantProjection proj(deck);
  const double p0 = proj(center);

  return [deck, center, radius, angle, proj, p0](std::complex<double> z) {
    // Locate the nearest deck translate T^k(center) via the axis parameter.
    const double k = std::round(proj(z) - p0);
    std::complex<double> c = center;
    Mobius step = k >= 0 ? deck : deck.inverse();
    for (int i = 0, n = static_cast<int>(std::fabs(k)); i < n; ++i) c = step.apply(c);

    const double d = hyp_dist(z, c);
    if (d >= radius) return z;
    const double theta = angle * (1.0 - d / radius);

    // Rotate about c: conjugate the standard elliptic rotation about i by
    // the isometry i -> c.
    const double u = c.real(), v = c.imag();
    const double sv = std::sqrt(v);
    const Mobius to_c{sv, u / sv, 0.0, 1.0 / sv};
    const double ch = std::cos(theta / 2.0), sh = std::sin(theta / 2.0);
    const Mobius rot{ch, sh, -sh, ch};
    return to_c.apply(rot.apply(to_c.inverse().apply(z)));
  };
}

}  // namespace disto
