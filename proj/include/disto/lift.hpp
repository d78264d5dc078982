#pragma once

// Lifts of circle / annulus / torus maps to their universal covers
// (R, R x [0,1], R^2). A lift carries its deck action: the integer matrix D
// with F(p + m) = F(p) + D m for deck vectors m. Identity-isotopic maps
// have D = I; linear toral maps such as A = (2,1;1,1) declare D = A.
//
// Lifts are closed-form and immutable; evaluation is pure, so orbit
// computations for distinct points may run concurrently.

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "disto/geometry.hpp"

namespace disto {

enum class CoverSpace { Circle, Annulus, Torus };

struct EquivarianceViolation : std::runtime_error {
  explicit EquivarianceViolation(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownRegistryName : std::runtime_error {
  explicit UnknownRegistryName(const std::string& name)
      : std::runtime_error("UnknownRegistryName: '" + name + "'") {}
};

class Lift {
 public:
  CoverSpace space = CoverSpace::Torus;
  std::array<int, 4> deck{1, 0, 0, 1};  // row-major D
  std::function<Vec2(Vec2)> map;
  std::string spec;  // registry string this lift was built from

  Vec2 operator()(Vec2 p) const { return map(p); }

  bool identity_isotopic() const { return deck == std::array<int, 4>{1, 0, 0, 1}; }

  Vec2 deck_image(Vec2 m) const {
    return {deck[0] * m.x + deck[1] * m.y, deck[2] * m.x + deck[3] * m.y};
  }
};

// Deck vectors generating the covering-translation group of the space.
std::vector<Vec2> deck_vectors(CoverSpace space);

// Reduce the periodic coordinates to the fundamental domain [0,1).
Vec2 reduce_to_fundamental(CoverSpace space, Vec2 p);

// Max over a grid of ||F(p+m) - F(p) - D m|| for the space's deck vectors;
// annulus lifts additionally contribute their boundary-preservation defect.
double equivariance_residual(const Lift& lift, int grid = 32);

// Throws EquivarianceViolation when the residual exceeds tol.
void require_equivariant(const Lift& lift, double tol = 1e-9, int grid = 32);

// Named builders, parameters as decimal strings after a colon:
//   circle:   identity-circle, rigid:c, sine:amp, projmat:a,b,c,d,
//             parabolic-rp1, rotation-rp1:theta, calegari-fiber:alpha
//   annulus:  identity-annulus, shear, meanzero-shear, translation-x:c
//   torus:    identity-torus, translation:vx,vy, shear-torus, skew:alpha,
//             matA, mat:a,b,c,d   (integer entries, deck = the matrix)
Lift make_lift(const std::string& spec);

// Inverse lifts for the invertible registry entries that need them
// (shear, translations, linear maps). Throws UnknownRegistryName otherwise.
Lift make_inverse_lift(const std::string& spec);

}  // namespace disto
