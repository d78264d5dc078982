#pragma once

// The subgroup of PSL(2, Z[sqrt2]) generated by
//   A = diag(sqrt2 - 1, sqrt2 + 1)   and   B = (1,1; 0,1),
// with lambda = sqrt2 + 1. The conjugation identity
//   (A^-n B A^n)(A^n B A^-n) = B^m,  m = lambda^{2n} + lambda^{-2n},
// exhibits B as distorted: m grows exponentially while the word has only
// 4n+2 tokens. The product embedding psi(g) = (g, gbar) replaces each
// entry a + b*sqrt2 of the second coordinate by a - b*sqrt2.

#include <stdexcept>
#include <string>
#include <vector>

#include "disto/mat2.hpp"
#include "disto/rings.hpp"
#include "disto/word.hpp"

namespace disto {

using QMat2 = Mat2<QuadInt>;
using PMat2 = ProjMat2<QuadInt>;

struct NonIntegerExponent : std::runtime_error {
  explicit NonIntegerExponent(const std::string& what) : std::runtime_error(what) {}
};

inline QuadInt psl2_lambda() { return QuadInt{1, 1}; }          // sqrt2 + 1
inline QuadInt psl2_lambda_inv() { return QuadInt{-1, 1}; }     // sqrt2 - 1

inline QMat2 psl2_A() {
  return QMat2{psl2_lambda_inv(), QuadInt{0, 0}, QuadInt{0, 0}, psl2_lambda()};
}
inline QMat2 psl2_B() {
  return QMat2{QuadInt{1, 0}, QuadInt{1, 0}, QuadInt{0, 0}, QuadInt{1, 0}};
}

class Psl2Oracle {
 public:
  using Element = PMat2;

  Psl2Oracle() : gens_{PMat2(psl2_A()), PMat2(psl2_B())} {}

  Element identity() const { return PMat2(QMat2::identity()); }
  const std::vector<Element>& generators() const { return gens_; }  // {A, B}
  Element multiply(const Element& u, const Element& v) const { return u * v; }
  Element invert(const Element& u) const { return u.inverse(); }
  std::string canonical_key(const Element& u) const { return u.key(); }

 private:
  std::vector<Element> gens_;
};

// m(n) = lambda^{2n} + lambda^{-2n}, computed exactly in Z[sqrt2]. The
// sqrt2-part must vanish; a nonzero value would mean the arithmetic is
// broken, hence the dedicated error.
inline BigInt psl2_exponent(int n) {
  if (n < 1) throw std::invalid_argument("psl2_exponent: n >= 1");
  QuadInt m = ring_pow(psl2_lambda(), 2ul * static_cast<unsigned long>(n)) +
              ring_pow(psl2_lambda_inv(), 2ul * static_cast<unsigned long>(n));
  if (m.b != 0)
    throw NonIntegerExponent("psl2_exponent: sqrt2-part of m is " + m.b.str());
  return m.a;
}

// (A^-n B A^n)(A^n B A^-n) as a 4n+2 token word; the 2n middle A-tokens are
// deliberately not cancelled, matching the stated upper bound |B^m| <= 4n+2.
inline Certificate psl2_certificate(int n) {
  if (n < 1) throw std::invalid_argument("psl2_certificate: n >= 1");
  constexpr int kA = 0, kB = 1;
  Word w;
  w.append(kA, -1, static_cast<std::size_t>(n));
  w.append(kB, +1);
  w.append(kA, +1, static_cast<std::size_t>(n));
  w.append(kA, +1, static_cast<std::size_t>(n));
  w.append(kB, +1);
  w.append(kA, -1, static_cast<std::size_t>(n));

  BigInt m = psl2_exponent(n);
  Certificate cert;
  cert.group = "psl2sqrt2";
  cert.power = m;
  cert.target_key = PMat2(psl2_B().pow(m)).key();
  cert.word = std::move(w);
  cert.tokens = cert.word.token_count();
  cert.verified = false;
  return cert;
}

// Entry-wise Galois conjugation; a ring automorphism, so it commutes with
// matrix multiplication.
inline QMat2 conj_entries(const QMat2& m) {
  return QMat2{m.a.conj(), m.b.conj(), m.c.conj(), m.d.conj()};
}

struct Psl2Pair {
  PMat2 g, gbar;

  friend Psl2Pair operator*(const Psl2Pair& u, const Psl2Pair& v) {
    return {u.g * v.g, u.gbar * v.gbar};
  }
  friend bool operator==(const Psl2Pair& u, const Psl2Pair& v) {
    return u.g == v.g && u.gbar == v.gbar;
  }
};

inline Psl2Pair psl2_product_embedding(const PMat2& g) {
  return {g, PMat2(conj_entries(g.rep))};
}

}  // namespace disto
