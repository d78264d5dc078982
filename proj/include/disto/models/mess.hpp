#pragma once

// Mess group model: the subgroup of torus diffeomorphisms generated by the
// automorphism A = (2,1;1,1) and the translation T(x) = x + w with w on the
// unstable line of A. With w normalized to (1, phi-1), conjugation scales
// the translation coefficient by the expanding eigenvalue lambda = phi^2,
// so the group is exactly Z |x Z[phi] with multiplication
//
//   (k1, t1) (k2, t2) = (k1 + k2, t1 + phi^{2 k1} t2).
//
// The model is faithful for the torus action: t*w lies in Z^2 only for
// t = 0, because 1 and phi are rationally independent.

#include <stdexcept>
#include <string>
#include <vector>

#include "disto/bigint.hpp"
#include "disto/mat2.hpp"
#include "disto/rings.hpp"
#include "disto/word.hpp"

namespace disto {

struct MessElt {
  BigInt k{0};    // power of A
  GoldenInt t{};  // translation coefficient along w

  friend bool operator==(const MessElt& u, const MessElt& v) {
    return u.k == v.k && u.t == v.t;
  }
  friend bool operator!=(const MessElt& u, const MessElt& v) { return !(u == v); }
};

class MessOracle {
 public:
  using Element = MessElt;

  MessOracle() : gens_{MessElt{1, GoldenInt{0, 0}}, MessElt{0, GoldenInt{1, 0}}} {}

  Element identity() const { return MessElt{0, GoldenInt{0, 0}}; }
  const std::vector<Element>& generators() const { return gens_; }  // {A, T}

  Element multiply(const Element& u, const Element& v) const {
    return MessElt{u.k + v.k, u.t + golden_phi2_pow(to_long(u.k)) * v.t};
  }

  Element invert(const Element& u) const {
    return MessElt{-u.k, -(golden_phi2_pow(to_long(-u.k)) * u.t)};
  }

  std::string canonical_key(const Element& u) const {
    return u.k.str() + "|" + u.t.key();
  }

 private:
  static long to_long(const BigInt& k) {
    if (k > 1000000 || k < -1000000)
      throw std::overflow_error("MessOracle: |k| too large for phi^{2k} expansion");
    return k.convert_to<long>();
  }

  std::vector<Element> gens_;
};

// tr A^n via the recurrence t0 = 2, t1 = 3, t_{k+1} = 3 t_k - t_{k-1};
// equals lambda^n + lambda^{-n} and agrees with the direct matrix power.
inline BigInt trace_power(int n) {
  if (n < 0) throw std::invalid_argument("trace_power: n >= 0");
  BigInt prev = 2, cur = 3;
  if (n == 0) return prev;
  for (int i = 1; i < n; ++i) {
    BigInt next = 3 * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

inline Mat2<BigInt> mess_matrix_A() { return Mat2<BigInt>{2, 1, 1, 1}; }

// The word A^-n T A^n A^n T A^-n (4n+2 tokens, nothing cancelled) evaluates
// to (0, phi^{-2n} + phi^{2n}) = (0, tr A^n), i.e. to T^{tr A^n}.
inline Certificate mess_certificate(int n) {
  if (n < 1) throw std::invalid_argument("mess_certificate: n >= 1");
  constexpr int kA = 0, kT = 1;
  Word w;
  w.append(kA, -1, static_cast<std::size_t>(n));
  w.append(kT, +1);
  w.append(kA, +1, static_cast<std::size_t>(n));
  w.append(kA, +1, static_cast<std::size_t>(n));
  w.append(kT, +1);
  w.append(kA, -1, static_cast<std::size_t>(n));

  Certificate cert;
  cert.group = "mess";
  cert.power = trace_power(n);
  cert.target_key = MessOracle{}.canonical_key(
      MessElt{0, GoldenInt{trace_power(n), 0}});
  cert.word = std::move(w);
  cert.tokens = cert.word.token_count();
  cert.verified = false;  // callers verify through the oracle
  return cert;
}

}  // namespace disto
