#pragma once

// Integer Heisenberg group: triples (x,y,z) with
//   (x,y,z)(x',y',z') = (x+x', y+y', z+z'+x*y').
// The center is {(0,0,z)} and [g,h] = (0,0,1) for g=(1,0,0), h=(0,1,0).

#include <string>

#include "disto/bigint.hpp"

namespace disto {

struct HeisElt {
  BigInt x{0}, y{0}, z{0};

  HeisElt() = default;
  HeisElt(BigInt x_, BigInt y_, BigInt z_)
      : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

  friend HeisElt operator*(const HeisElt& u, const HeisElt& v) {
    return {u.x + v.x, u.y + v.y, u.z + v.z + u.x * v.y};
  }

  HeisElt inverse() const { return {-x, -y, -z + x * y}; }

  friend bool operator==(const HeisElt& u, const HeisElt& v) {
    return u.x == v.x && u.y == v.y && u.z == v.z;
  }
  friend bool operator!=(const HeisElt& u, const HeisElt& v) { return !(u == v); }

  bool is_identity() const { return x == 0 && y == 0 && z == 0; }
  bool is_central() const { return x == 0 && y == 0; }

  std::string key() const { return x.str() + "," + y.str() + "," + z.str(); }
};

inline HeisElt heis_mul(const HeisElt& u, const HeisElt& v) { return u * v; }
inline HeisElt heis_inv(const HeisElt& u) { return u.inverse(); }

inline HeisElt heis_commutator(const HeisElt& g, const HeisElt& h) {
  return g * h * g.inverse() * h.inverse();
}

}  // namespace disto
