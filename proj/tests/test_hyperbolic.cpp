#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"

#include "disto/hyperbolic.hpp"

using disto::EquivariantProjection;
using disto::linear_tracing_estimate;
using disto::Mobius;
using disto::mobius_classify;
using disto::MobiusType;

namespace {

const double kLambda = 1.0 + std::sqrt(2.0);
const Mobius kDiag = Mobius::from_matrix(kLambda, 0, 0, 1.0 / kLambda);

std::mt19937_64 rng(0x5eed0006);

Mobius random_mobius() {
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  for (;;) {
    const double a = d(rng), b = d(rng), c = d(rng), e = d(rng);
    if (a * e - b * c > 0.1) return Mobius::from_matrix(a, b, c, e);
  }
}

}  // namespace

TEST_CASE("classification by trace") {
  CHECK(mobius_classify(kDiag) == MobiusType::Hyperbolic);
  CHECK(mobius_classify(Mobius::from_matrix(1, 1, 0, 1)) == MobiusType::Parabolic);
  const double th = 0.3;
  CHECK(mobius_classify(Mobius::from_matrix(std::cos(th), -std::sin(th), std::sin(th),
                                            std::cos(th))) == MobiusType::Elliptic);
  CHECK_THROWS_AS(Mobius::from_matrix(1, 0, 0, -1), std::invalid_argument);

  // Conjugation preserves the class (trace invariance).
  for (int i = 0; i < 100; ++i) {
    const Mobius g = random_mobius();
    for (const Mobius& m :
         {kDiag, Mobius::from_matrix(1, 1, 0, 1),
          Mobius::from_matrix(std::cos(th), -std::sin(th), std::sin(th), std::cos(th))}) {
      const Mobius conj = g * m * g.inverse();
      CHECK(std::fabs(std::fabs(conj.trace()) - std::fabs(m.trace())) < 1e-9);
    }
  }
}

TEST_CASE("axis endpoints and translation length") {
  const auto ax = disto::axis_endpoints(kDiag);
  CHECK(ax.source == 0.0);
  CHECK(std::isinf(ax.sink));

  // tr = 2 sqrt2, arccosh(sqrt2) = log(1 + sqrt2).
  CHECK(disto::translation_length_hyp(kDiag) ==
        doctest::Approx(2.0 * std::log(kLambda)).epsilon(1e-12));

  CHECK_THROWS_AS(disto::axis_endpoints(Mobius::from_matrix(1, 1, 0, 1)), disto::WrongType);
  CHECK_THROWS_AS(disto::translation_length_hyp(Mobius::from_matrix(std::cos(0.3), -std::sin(0.3),
                                                                    std::sin(0.3), std::cos(0.3))),
                  disto::WrongType);

  // Conjugated axis: endpoints move by the conjugator, orientation kept.
  const Mobius g = Mobius::from_matrix(1, 1, 1, 2);
  const Mobius conj = g * kDiag * g.inverse();
  const auto cax = disto::axis_endpoints(conj);
  CHECK(cax.source == doctest::Approx(0.5).epsilon(1e-12));   // g(0) = 1/2
  CHECK(cax.sink == doctest::Approx(1.0).epsilon(1e-12));     // g(inf) = 1
  CHECK(disto::translation_length_hyp(conj) ==
        doctest::Approx(2.0 * std::log(kLambda)).epsilon(1e-9));
}

TEST_CASE("equivariant projection onto the axis") {
  const EquivariantProjection p(kDiag);

  // Points on the axis project to their own parameter: log r / ell.
  const double ell = 2.0 * std::log(kLambda);
  for (double r : {0.5, 1.0, 3.7}) {
    CHECK(p(std::complex<double>(0, r)) == doctest::Approx(std::log(r) / ell).epsilon(1e-12));
  }
  // Radial projection: z = r e^{i theta} has the same parameter as ir.
  CHECK(p(std::polar(2.0, 1.1)) == doctest::Approx(std::log(2.0) / ell).epsilon(1e-12));

  // Equivariance p(Tz) = p(z) + 1 on a sample set, here and for a
  // conjugated axis with both endpoints finite.
  const Mobius g = Mobius::from_matrix(1, 1, 1, 2);
  const Mobius conj = g * kDiag * g.inverse();
  const EquivariantProjection pc(conj);
  for (std::complex<double> z : {std::complex<double>(0.3, 0.8), std::complex<double>(-1.2, 2.0),
                                 std::complex<double>(2.0, 0.1)}) {
    CHECK(std::fabs(p(kDiag.apply(z)) - p(z) - 1.0) < 1e-9);
    CHECK(std::fabs(pc(conj.apply(z)) - pc(z) - 1.0) < 1e-9);
  }
}

TEST_CASE("linear tracing envelopes") {
  const std::complex<double> z(0.0, 1.2);

  auto t1 = linear_tracing_estimate(disto::mobius_map(kDiag), kDiag, z, 50);
  CHECK(t1.final_envelope() == doctest::Approx(1.0).epsilon(1e-9));

  auto t2 = linear_tracing_estimate(disto::mobius_map(kDiag * kDiag), kDiag, z, 50);
  CHECK(t2.final_envelope() == doctest::Approx(2.0).epsilon(1e-9));

  // Equivariant twist: orbits stay in one bump ball, so tracing dies.
  const auto twist = disto::make_equivariant_twist(kDiag, {0.0, 1.0}, 0.4, 1.0);
  auto t3 = linear_tracing_estimate(twist, kDiag, std::complex<double>(0.0, std::exp(0.2)), 200);
  CHECK(t3.final_envelope() < 0.01);

  // A parabolic does not commute with the diagonal deck map.
  const Mobius shift = Mobius::from_matrix(1, 1, 0, 1);
  CHECK_THROWS_AS(linear_tracing_estimate(disto::mobius_map(shift), kDiag, z, 10),
                  disto::CommutationViolation);
}

TEST_CASE("equivariant twist commutes exactly and moves points") {
  const auto twist = disto::make_equivariant_twist(kDiag, {0.0, 1.0}, 0.4, 1.0);
  for (std::complex<double> z : {std::complex<double>(0.0, 1.1), std::complex<double>(0.1, 0.9),
                                 std::complex<double>(0.0, 2.4), std::complex<double>(1.0, 1.0)}) {
    CHECK(std::abs(twist(kDiag.apply(z)) - kDiag.apply(twist(z))) < 1e-9);
  }
  // Inside the bump the twist is not the identity.
  CHECK(std::abs(twist(std::complex<double>(0.05, 1.1)) - std::complex<double>(0.05, 1.1)) >
        1e-4);
  // Far away it is.
  CHECK(std::abs(twist(std::complex<double>(5.0, 0.2)) - std::complex<double>(5.0, 0.2)) == 0.0);
}
