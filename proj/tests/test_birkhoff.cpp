#include <cmath>

#include "doctest.h"

#include "disto/birkhoff.hpp"
#include "disto/lift.hpp"

using disto::first_return;
using disto::make_lift;
using disto::RegionIndicator;
using disto::Vec2;

namespace {

// Membership with coordinates snapped to a 1e-9 grid first: the caller's
// way of keeping decimal orbits (0.1 + 3*0.3 = 1.0) off binary-rounding
// boundaries. Tie conventions belong to the indicator by design.
RegionIndicator snapped_arc(double lo, double hi) {
  return [lo, hi](Vec2 p) {
    double x = std::round(p.x * 1e9) / 1e9;
    x -= std::floor(x);
    return lo <= x && x < hi;
  };
}

const RegionIndicator kEverything = [](Vec2) { return true; };

}  // namespace

TEST_CASE("first return times on circle rotations") {
  const auto rot3 = make_lift("rigid:0.3");
  const auto r = first_return(rot3, snapped_arc(0.0, 0.25), {0.1, 0}, 100);
  REQUIRE(r.has_value());
  CHECK(r->time == 3);  // orbit 0.1 -> 0.4 -> 0.7 -> 1.0 = 0.0 in the arc
  CHECK(std::fabs(r->reduced.x) < 1e-6);
  CHECK(r->lifted.x == doctest::Approx(1.0).epsilon(1e-9));

  const auto id = make_lift("identity-annulus");
  const auto r1 = first_return(id, kEverything, {0.4, 0.5}, 10);
  REQUIRE(r1.has_value());
  CHECK(r1->time == 1);

  const auto rot5 = make_lift("rigid:0.5");
  const auto r2 = first_return(rot5, snapped_arc(0.0, 0.25), {0.1, 0}, 100);
  REQUIRE(r2.has_value());
  CHECK(r2->time == 2);  // 0.1 -> 0.6 -> 1.1 = 0.1

  // Period-two orbit that never enters the window: reported, not fatal.
  const auto never = first_return(rot5, snapped_arc(0.3, 0.4), {0.1, 0}, 50);
  CHECK_FALSE(never.has_value());
}

TEST_CASE("birkhoff displacement sums in the lifted coordinate") {
  const auto rot = make_lift("rigid:0.6180339887498949");
  CHECK(disto::birkhoff_displacement_sum(rot, kEverything, {0.2, 0}, 0) == 0.0);
  const int n = 1000;
  const double s = disto::birkhoff_displacement_sum(rot, kEverything, {0.2, 0}, n);
  CHECK(std::fabs(s - n * 0.6180339887498949) < 1e-9);

  // Mean-zero shear: S(n,(x,y)) = n (y - 1/2), no modular folding.
  const auto shear = make_lift("meanzero-shear");
  for (int k : {1, 5, 9})
    CHECK(disto::birkhoff_displacement_sum(shear, kEverything, {0.0, 0.25}, k) ==
          doctest::Approx(k * (0.25 - 0.5)).epsilon(1e-12));

  // A region the orbit leaves forever propagates NoReturn with the index.
  const auto rot5 = make_lift("rigid:0.5");
  try {
    disto::birkhoff_displacement_sum(rot5, snapped_arc(0.3, 0.4), {0.1, 0}, 3, 40);
    FAIL("expected NoReturnError");
  } catch (const disto::NoReturnError& e) {
    CHECK(e.index == 0);
  }
}

TEST_CASE("recurrence witnesses") {
  // Identity displacement: every n qualifies.
  const auto id = make_lift("identity-annulus");
  const auto all = disto::recurrence_witnesses(id, kEverything, {0.3, 0.5}, 10);
  CHECK(all == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10});

  // x = 0 is fixed by the sine lift: every n again.
  const auto sine = make_lift("sine:0.1");
  const auto fixed = disto::recurrence_witnesses(sine, kEverything, {0.0, 0}, 12);
  CHECK(fixed.size() == 12);

  // Mean-zero shear at y = 0.3: |n(0.3-0.5)| < 1 exactly for n in 1..4.
  const auto shear = make_lift("meanzero-shear");
  const auto wit = disto::recurrence_witnesses(shear, kEverything, {0.0, 0.3}, 25);
  CHECK(wit == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("interior fixed point search") {
  // Mean-zero shear: the fixed circle y = 1/2, localized to the grid.
  const auto shear = make_lift("meanzero-shear");
  const auto candidates = disto::interior_fixed_point_search(shear, 32, 0.01);
  CHECK(candidates.size() >= 32);
  for (const Vec2& c : candidates) CHECK(std::fabs(c.y - 0.5) < 0.01);

  // Rigid rotation: no fixed points at all.
  const auto rot = disto::interior_fixed_point_search(make_lift("translation-x:0.3"), 16, 0.01);
  CHECK(rot.empty());

  // Identity: every refined cell qualifies.
  const auto id = disto::interior_fixed_point_search(make_lift("identity-annulus"), 8, 0.01);
  CHECK(id.size() == 8u * 8u * 4u);
}

TEST_CASE("linear displacement detector") {
  // Shear separates (0,0) and (0,1) at unit speed: envelope -> 1.
  const auto shear = make_lift("shear-torus");
  const auto sep = disto::linear_displacement_detector(shear, {0, 0}, {0, 1}, 100);
  CHECK(sep.final_envelope() == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(sep.final_envelope() > 0.5);

  // Translations move both points together: ratio d0/n -> 0.
  const auto trans = make_lift("translation:0.3,0.7");
  const auto flat = disto::linear_displacement_detector(trans, {0, 0}, {0, 1}, 100);
  CHECK(flat.final_envelope() == doctest::Approx(1.0 / 100.0).epsilon(1e-9));

  for (std::size_t i = 1; i < sep.envelope.size(); ++i)
    CHECK(sep.envelope[i] <= sep.envelope[i - 1]);
}
