#pragma once

// Exact 2x2 matrices over Z, Z[sqrt2] or Z[phi], plus the projective
// quotient mod +-I. ProjMat2 keeps a canonical sign form (first nonzero
// entry in row-major order positive) so it can serve as a hashable BFS key.

#include <stdexcept>
#include <string>
#include <utility>

#include "disto/bigint.hpp"
#include "disto/rings.hpp"

namespace disto {

struct NotUnimodular : std::domain_error {
  NotUnimodular() : std::domain_error("NotUnimodular: mat2_inv requires det = +-1") {}
};

template <class R>
struct Mat2 {
  R a{0}, b{0}, c{0}, d{0};  // row-major (a b; c d)

  Mat2() = default;
  Mat2(R a_, R b_, R c_, R d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

  static Mat2 identity() { return {R{1}, R{0}, R{0}, R{1}}; }

  friend Mat2 operator*(const Mat2& m, const Mat2& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
            m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
  }

  Mat2 operator-() const { return {-a, -b, -c, -d}; }

  friend bool operator==(const Mat2& m, const Mat2& n) {
    return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
  }
  friend bool operator!=(const Mat2& m, const Mat2& n) { return !(m == n); }

  R det() const { return a * d - b * c; }
  R trace() const { return a + d; }

  // Adjugate route; only valid (and only allowed) when det = +-1.
  Mat2 inverse() const {
    R dt = det();
    if (dt == R{1}) return {d, -b, -c, a};
    if (dt == R{-1}) return {-d, b, c, -a};
    throw NotUnimodular{};
  }

  Mat2 pow(unsigned long e) const {
    Mat2 r = identity();
    Mat2 base = *this;
    while (e) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  // Binary exponentiation with an arbitrary-precision exponent (the PSL2
  // certificate target B^m has m ~ lambda^{2n}).
  Mat2 pow(const BigInt& e) const {
    if (e < 0) return inverse().pow(BigInt(-e));
    Mat2 r = identity();
    Mat2 base = *this;
    BigInt k = e;
    while (k > 0) {
      if ((k & 1) != 0) r = r * base;
      base = base * base;
      k >>= 1;
    }
    return r;
  }

  std::string key() const {
    return entry_key(a) + "," + entry_key(b) + ";" + entry_key(c) + "," + entry_key(d);
  }

 private:
  static std::string entry_key(const BigInt& v) { return v.str(); }
  static std::string entry_key(const QuadInt& v) { return v.key(); }
  static std::string entry_key(const GoldenInt& v) { return v.key(); }
};

// Projective matrix: Mat2 mod +-I, stored with the first nonzero entry in
// row-major order positive. canonicalize(M) == canonicalize(-M) by
// construction.
template <class R>
struct ProjMat2 {
  Mat2<R> rep;

  ProjMat2() : rep(Mat2<R>::identity()) {}
  explicit ProjMat2(const Mat2<R>& m) : rep(canonical_rep(m)) {}

  static Mat2<R> canonical_rep(const Mat2<R>& m) {
    const R* entries[4] = {&m.a, &m.b, &m.c, &m.d};
    for (const R* e : entries) {
      int s = sign_of(*e);
      if (s > 0) return m;
      if (s < 0) return -m;
    }
    return m;  // zero matrix; not a group element, but keep it total
  }

  friend ProjMat2 operator*(const ProjMat2& m, const ProjMat2& n) {
    return ProjMat2(m.rep * n.rep);
  }

  ProjMat2 inverse() const { return ProjMat2(rep.inverse()); }

  friend bool operator==(const ProjMat2& m, const ProjMat2& n) { return m.rep == n.rep; }
  friend bool operator!=(const ProjMat2& m, const ProjMat2& n) { return !(m == n); }

  std::string key() const { return rep.key(); }
};

}  // namespace disto
