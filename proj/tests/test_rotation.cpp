#include <cmath>
#include <numbers>

#include "doctest.h"

#include "disto/lift.hpp"
#include "disto/rotation.hpp"

using disto::Lift;
using disto::make_lift;
using disto::rotation_number_circle;
using disto::rotation_vector;
using disto::Vec2;

TEST_CASE("every shipped lift satisfies its deck contract") {
  for (const char* spec :
       {"identity-circle", "rigid:0.4", "sine:0.1", "parabolic-rp1", "rotation-rp1:0.3",
        "projmat:2,1,1,1", "calegari-fiber:1.4142135623730951", "identity-annulus", "shear",
        "meanzero-shear", "translation-x:0.37", "identity-torus", "translation:0.3,0.7",
        "shear-torus", "skew:0.1", "matA", "mat:1,2,0,1"}) {
    CAPTURE(spec);
    CHECK(disto::equivariance_residual(make_lift(spec)) < 1e-9);
  }
  CHECK_THROWS_AS(make_lift("no-such-lift"), disto::UnknownRegistryName);
}

TEST_CASE("rotation vector of a translation is exact and converged") {
  // Dyadic translation: bitwise-exact partial averages.
  const auto report = rotation_vector(make_lift("translation:0.25,0.75"), {0, 0}, 64);
  CHECK(report.estimate.x == 0.25);
  CHECK(report.estimate.y == 0.75);
  CHECK(report.converged);
  CHECK(report.window_variation == 0.0);

  const auto r2 = rotation_vector(make_lift("translation:0.3,0.7"), {0.2, 0.1}, 1000);
  CHECK(r2.estimate.x == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(r2.estimate.y == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(r2.converged);
}

TEST_CASE("annulus shear rotates by the height of the base point") {
  const auto report = rotation_vector(make_lift("shear"), {0.0, 0.25}, 256);
  CHECK(report.estimate.x == 0.25);
  CHECK(report.estimate.y == 0.0);
  CHECK(report.converged);
}

TEST_CASE("skew product does not converge") {
  const auto report = rotation_vector(make_lift("skew:0.1"), {0.2, 0.0}, 512);
  CHECK_FALSE(report.converged);
}

TEST_CASE("broken lift trips the equivariance gate") {
  Lift broken;
  broken.space = disto::CoverSpace::Circle;
  broken.spec = "broken";
  broken.map = [](Vec2 p) { return Vec2{p.x * 1.1, 0.0}; };
  CHECK_THROWS_AS(rotation_vector(broken, {0, 0}, 64), disto::EquivarianceViolation);
}

TEST_CASE("base point independence within 2|m|/n") {
  const auto lift = make_lift("shear");
  const int n = 256;
  const auto a = rotation_vector(lift, {0.1, 0.4}, n);
  const auto b = rotation_vector(lift, {1.1, 0.4}, n);  // deck shift (1,0)
  CHECK((a.estimate - b.estimate).norm() < 2.0 / n);
}

TEST_CASE("circle rotation numbers") {
  const int n = 1000;
  const double est = rotation_number_circle(make_lift("rigid:0.4"), 0.0, n);
  CHECK(std::fabs(est - 0.4) < 2.0 / n);

  // Estimates from different base points agree within 4/n for monotone
  // lifts.
  const auto sine = make_lift("sine:0.1");
  for (int i = 0; i < 8; ++i) {
    for (int j = i + 1; j < 8; ++j) {
      const double ei = rotation_number_circle(sine, i / 8.0, n);
      const double ej = rotation_number_circle(sine, j / 8.0, n);
      CHECK(std::fabs(ei - ej) < 4.0 / n);
    }
  }

  Lift decreasing;
  decreasing.space = disto::CoverSpace::Circle;
  decreasing.spec = "toosteep";
  decreasing.map = [](Vec2 p) {
    return Vec2{p.x + 0.3 * std::sin(2.0 * std::numbers::pi * p.x), 0.0};
  };
  CHECK_THROWS_AS(rotation_number_circle(decreasing, 0.0, 100),
                  disto::MonotonicityViolation);
}

TEST_CASE("projectivized circle maps") {
  // Identity matrix gives the identity lift.
  const auto id = disto::projectivized_circle_map({1, 0, 0, 1});
  for (double u : {-1.3, -0.4, 0.0, 0.2, 0.5, 0.9, 2.7})
    CHECK(id({u, 0}).x == doctest::Approx(u).epsilon(1e-12));

  // Rotation by theta translates the RP^1 parameter by theta/pi.
  const double theta = 0.3;
  const auto rot = make_lift("rotation-rp1:0.3");
  for (double u : {0.0, 0.25, 0.6, 1.4})
    CHECK(rot({u, 0}).x == doctest::Approx(u + theta / std::numbers::pi).epsilon(1e-12));
  const double est = rotation_number_circle(rot, 0.1, 10000);
  CHECK(std::fabs(est - theta / std::numbers::pi) < 1e-3);

  // Parabolic B fixes the x-axis direction u = 0 and has rotation number 0.
  const auto par = make_lift("parabolic-rp1");
  CHECK(std::fabs(par({0, 0}).x) < 1e-9);
  const int n = 1000;
  CHECK(std::fabs(rotation_number_circle(par, 0.3, n)) < 2.0 / n);

  // diag(lambda, lambda^-1): exactly the two axis directions are fixed.
  const double lambda = 1.0 + std::sqrt(2.0);
  const auto hyp = disto::projectivized_circle_map({lambda, 0, 0, 1.0 / lambda});
  CHECK(std::fabs(hyp({0, 0}).x - 0.0) < 1e-12);
  CHECK(std::fabs(hyp({0.5, 0}).x - 0.5) < 1e-12);
  int interior_fixed = 0;
  for (int i = 1; i < 4096; ++i) {
    const double u = i / 4096.0;
    if (std::fabs(hyp({u, 0}).x - u) < 1e-6 && std::fabs(u - 0.5) > 1e-3) ++interior_fixed;
  }
  CHECK(interior_fixed == 0);

  CHECK_THROWS_AS(disto::projectivized_circle_map({1, 2, 2, 4}), disto::SingularMatrix);
  CHECK_THROWS_AS(disto::projectivized_circle_map({0, 1, 1, 0}), disto::SingularMatrix);
}

TEST_CASE("mean rotation vector") {
  // Shear against the uniform 101-point grid on the y-axis: integral of y.
  disto::EmpiricalMeasure grid;
  for (int j = 0; j <= 100; ++j)
    grid.points.push_back({Vec2{0.0, j / 100.0}, 1.0 / 101.0});
  const Vec2 mean = disto::mean_rotation_vector(make_lift("shear"), grid, 256);
  CHECK(std::fabs(mean.x - 0.5) < 0.01);
  CHECK(mean.y == 0.0);

  // Point mass at a fixed point.
  disto::EmpiricalMeasure atom;
  atom.points.push_back({Vec2{0.2, 0.5}, 1.0});
  const Vec2 fixed = disto::mean_rotation_vector(make_lift("meanzero-shear"), atom, 64);
  CHECK(fixed.x == 0.0);
  CHECK(fixed.y == 0.0);

  // Translations: the answer is v for any measure, and the mean rotation
  // vector is literally additive on the translation subgroup (dyadic
  // parameters make the check exact).
  disto::EmpiricalMeasure two;
  two.points.push_back({Vec2{0.1, 0.9}, 0.5});
  two.points.push_back({Vec2{0.7, 0.3}, 0.5});
  const Vec2 v = disto::mean_rotation_vector(make_lift("translation:0.25,0.5"), two, 64);
  CHECK(v.x == 0.25);
  CHECK(v.y == 0.5);
  const Vec2 w = disto::mean_rotation_vector(make_lift("translation:0.125,0.25"), two, 64);
  Lift composed;
  composed.space = disto::CoverSpace::Torus;
  composed.spec = "translation-composed";
  composed.map = [](Vec2 p) { return Vec2{p.x + 0.25 + 0.125, p.y + 0.5 + 0.25}; };
  const Vec2 sum = disto::mean_rotation_vector(composed, two, 64);
  CHECK(sum.x == v.x + w.x);
  CHECK(sum.y == v.y + w.y);

  // Non-convergent samples are named, not averaged over.
  disto::EmpiricalMeasure bad;
  bad.points.push_back({Vec2{0.2, 0.0}, 1.0});
  try {
    disto::mean_rotation_vector(make_lift("skew:0.1"), bad, 256);
    FAIL("expected NonConvergentSample");
  } catch (const disto::NonConvergentSample& e) {
    REQUIRE(e.offending.size() == 1);
    CHECK(e.offending[0].x == 0.2);
  }

  disto::EmpiricalMeasure unnormalized;
  unnormalized.points.push_back({Vec2{0, 0}, 0.5});
  CHECK_THROWS_AS(unnormalized.validate(), std::invalid_argument);
}
