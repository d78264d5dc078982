#pragma once

// Exact arithmetic in the two quadratic rings used by the model groups:
//   QuadInt   a + b*sqrt(2)   (coefficient ring of the PSL(2,Z[sqrt2]) pair)
//   GoldenInt a + b*phi, phi = (1+sqrt5)/2, phi^2 = phi + 1
//             (eigenvalue ring of the torus automorphism A = (2,1;1,1))
//
// Both carry an exact sign, so elements order totally without floating
// point; sign drives the projective canonical form in mat2.hpp.

#include <cmath>
#include <sstream>
#include <string>

#include "disto/bigint.hpp"

namespace disto {

struct QuadInt {
  BigInt a{0};  // rational part
  BigInt b{0};  // sqrt(2) coefficient

  QuadInt() = default;
  QuadInt(BigInt a_, BigInt b_) : a(std::move(a_)), b(std::move(b_)) {}
  QuadInt(long v) : a(v), b(0) {}

  friend QuadInt operator+(const QuadInt& u, const QuadInt& v) {
    return {u.a + v.a, u.b + v.b};
  }
  friend QuadInt operator-(const QuadInt& u, const QuadInt& v) {
    return {u.a - v.a, u.b - v.b};
  }
  QuadInt operator-() const { return {-a, -b}; }

  // (a + b√2)(c + d√2) = (ac + 2bd) + (ad + bc)√2
  friend QuadInt operator*(const QuadInt& u, const QuadInt& v) {
    return {u.a * v.a + 2 * u.b * v.b, u.a * v.b + u.b * v.a};
  }

  friend bool operator==(const QuadInt& u, const QuadInt& v) {
    return u.a == v.a && u.b == v.b;
  }
  friend bool operator!=(const QuadInt& u, const QuadInt& v) { return !(u == v); }

  // Galois conjugate a + b√2 -> a - b√2.
  QuadInt conj() const { return {a, -b}; }

  // Field norm N(a+b√2) = a^2 - 2b^2; units have norm ±1.
  BigInt norm() const { return a * a - 2 * b * b; }
  bool is_unit() const { BigInt n = norm(); return n == 1 || n == -1; }
  bool is_zero() const { return a == 0 && b == 0; }

  // Exact sign of the real value a + b√2 (no floating point: compares
  // a^2 against 2b^2 in the mixed-sign cases).
  int sign() const {
    int sa = a.sign(), sb = b.sign();
    if (sa == 0 && sb == 0) return 0;
    if (sa >= 0 && sb >= 0) return 1;
    if (sa <= 0 && sb <= 0) return -1;
    BigInt lhs = a * a, rhs = 2 * b * b;
    if (sa > 0) return lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
    return rhs > lhs ? 1 : (rhs < lhs ? -1 : 0);
  }

  double to_real() const { return to_double(a) + to_double(b) * std::sqrt(2.0); }

  std::string key() const { return a.str() + "," + b.str(); }

  std::string str() const {
    std::ostringstream os;
    os << a.str();
    if (b >= 0) os << "+";
    os << b.str() << "*sqrt2";
    return os.str();
  }
};

struct GoldenInt {
  BigInt a{0};  // rational part
  BigInt b{0};  // phi coefficient

  GoldenInt() = default;
  GoldenInt(BigInt a_, BigInt b_) : a(std::move(a_)), b(std::move(b_)) {}
  GoldenInt(long v) : a(v), b(0) {}

  friend GoldenInt operator+(const GoldenInt& u, const GoldenInt& v) {
    return {u.a + v.a, u.b + v.b};
  }
  friend GoldenInt operator-(const GoldenInt& u, const GoldenInt& v) {
    return {u.a - v.a, u.b - v.b};
  }
  GoldenInt operator-() const { return {-a, -b}; }

  // (a + b phi)(c + d phi) = ac + (ad+bc) phi + bd phi^2
  //                        = (ac + bd) + (ad + bc + bd) phi
  friend GoldenInt operator*(const GoldenInt& u, const GoldenInt& v) {
    return {u.a * v.a + u.b * v.b, u.a * v.b + u.b * v.a + u.b * v.b};
  }

  friend bool operator==(const GoldenInt& u, const GoldenInt& v) {
    return u.a == v.a && u.b == v.b;
  }
  friend bool operator!=(const GoldenInt& u, const GoldenInt& v) { return !(u == v); }

  // N(a + b phi) = a^2 + ab - b^2; units have |norm| = 1.
  BigInt norm() const { return a * a + a * b - b * b; }
  bool is_unit() const { BigInt n = norm(); return n == 1 || n == -1; }
  bool is_zero() const { return a == 0 && b == 0; }

  // Exact sign of a + b phi = ((2a+b) + b sqrt5)/2.
  int sign() const {
    BigInt u = 2 * a + b;
    const BigInt& v = b;
    int su = u.sign(), sv = v.sign();
    if (su == 0 && sv == 0) return 0;
    if (su >= 0 && sv >= 0) return 1;
    if (su <= 0 && sv <= 0) return -1;
    BigInt lhs = u * u, rhs = 5 * v * v;
    if (su > 0) return lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
    return rhs > lhs ? 1 : (rhs < lhs ? -1 : 0);
  }

  double to_real() const {
    static const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;
    return to_double(a) + to_double(b) * kPhi;
  }

  std::string key() const { return a.str() + "," + b.str(); }

  std::string str() const {
    std::ostringstream os;
    os << a.str();
    if (b >= 0) os << "+";
    os << b.str() << "*phi";
    return os.str();
  }
};

// phi^2 = 1 + phi and phi^-2 = 2 - phi; both are units, so phi^{2k} is
// defined for every integer k.
inline GoldenInt golden_phi2_pow(long k) {
  GoldenInt base = k >= 0 ? GoldenInt{1, 1} : GoldenInt{2, -1};
  GoldenInt r{1, 0};
  for (long i = 0, n = k >= 0 ? k : -k; i < n; ++i) r = r * base;
  return r;
}

// Generic exact-sign hook used by the projective canonical form.
inline int sign_of(const QuadInt& v) { return v.sign(); }
inline int sign_of(const GoldenInt& v) { return v.sign(); }

template <class R>
R ring_pow(R base, unsigned long e) {
  R r{1};
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

}  // namespace disto
