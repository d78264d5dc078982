#pragma once

// Plane action of the Heisenberg group behind the C^0 sphere example:
//   G(x,y) = (x+y, y),  H(x,y) = (x, y+1),  F = [G,H] = (x+1, y),
// descending to the cylinder quotient (x,y) ~ (x+alpha, y).
//
// Maps are stored with exact rational coefficients and alpha adjoined as a
// formal transcendental: (x,y) -> (x + s*y + p + q*alpha, y + r). The
// commutator identity and the quotient-compatibility check are therefore
// algebraic identities, never tolerance checks; floating point only enters
// when estimating the induced fiber rotation number.

#include <string>

#include "disto/bigint.hpp"
#include "disto/geometry.hpp"
#include "disto/lift.hpp"

namespace disto {

struct AffinePlaneMap {
  BigRational shear{0};     // coefficient of y in the x-image
  BigRational dx{0};        // rational translation part
  BigRational dx_alpha{0};  // translation part carried by alpha
  BigRational dy{0};        // y-translation

  static AffinePlaneMap identity() { return {}; }

  // (f2 o f1)(x,y), composed exactly.
  friend AffinePlaneMap operator*(const AffinePlaneMap& f2, const AffinePlaneMap& f1) {
    return {f1.shear + f2.shear, f1.dx + f2.dx + f2.shear * f1.dy,
            f1.dx_alpha + f2.dx_alpha, f1.dy + f2.dy};
  }

  AffinePlaneMap inverse() const { return {-shear, -dx + shear * dy, -dx_alpha, -dy}; }

  friend bool operator==(const AffinePlaneMap& f, const AffinePlaneMap& g) {
    return f.shear == g.shear && f.dx == g.dx && f.dx_alpha == g.dx_alpha && f.dy == g.dy;
  }

  Vec2 apply(Vec2 p, double alpha) const {
    return {p.x + p.y * shear.convert_to<double>() + dx.convert_to<double>() +
                alpha * dx_alpha.convert_to<double>(),
            p.y + dy.convert_to<double>()};
  }
};

inline AffinePlaneMap affine_commutator(const AffinePlaneMap& g, const AffinePlaneMap& h) {
  return g * h * g.inverse() * h.inverse();
}

struct PlaneAction {
  AffinePlaneMap G, H, F;
  double alpha = 0.0;  // quotient modulus; irrationality is caller-supplied
};

// The three maps of the action; alpha cannot be verified irrational and is
// taken on trust from the caller.
PlaneAction calegari_action(double alpha);

// [G,H] == F, exactly.
bool commutator_equals_F(const PlaneAction& action);

// Every map in the group commutes with (x,y) -> (x + alpha, y), exactly.
// Checked on the generators and a few products.
bool quotient_compatible(const PlaneAction& action);

// Circle lift of the rotation induced by F on the y = 0 fiber of the
// quotient cylinder, in coordinates normalized to circumference 1:
// u -> u + 1/alpha.
Lift fiber_rotation_lift(const PlaneAction& action);

}  // namespace disto
