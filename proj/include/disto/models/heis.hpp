#pragma once

// Heisenberg group oracle over the exact triples of heisenberg.hpp.
// The standard generating set is {g, h} with g = (1,0,0), h = (0,1,0);
// the extended set adds the central f = (0,0,1), which is what the
// generator-independence (bi-Lipschitz) comparison exercises.

#include <stdexcept>
#include <string>
#include <vector>

#include "disto/heisenberg.hpp"
#include "disto/word.hpp"

namespace disto {

class HeisOracle {
 public:
  using Element = HeisElt;

  enum class GenSet { Standard, WithCenter };

  explicit HeisOracle(GenSet set = GenSet::Standard) {
    gens_ = {HeisElt{1, 0, 0}, HeisElt{0, 1, 0}};
    if (set == GenSet::WithCenter) gens_.push_back(HeisElt{0, 0, 1});
  }

  Element identity() const { return HeisElt{}; }
  const std::vector<Element>& generators() const { return gens_; }
  Element multiply(const Element& u, const Element& v) const { return u * v; }
  Element invert(const Element& u) const { return u.inverse(); }
  std::string canonical_key(const Element& u) const { return u.key(); }

 private:
  std::vector<Element> gens_;
};

// Cyclic subgroup <f> of the center, used to check that f is undistorted
// in any abelian subgroup: |f^n| = n there.
class HeisCenterOracle {
 public:
  using Element = HeisElt;

  HeisCenterOracle() : gens_{HeisElt{0, 0, 1}} {}

  Element identity() const { return HeisElt{}; }
  const std::vector<Element>& generators() const { return gens_; }
  Element multiply(const Element& u, const Element& v) const { return u * v; }
  Element invert(const Element& u) const { return u.inverse(); }
  std::string canonical_key(const Element& u) const { return u.key(); }

 private:
  std::vector<Element> gens_;
};

// g^n h^n g^-n h^-n: 4n tokens evaluating to (0,0,n^2).
inline Certificate heisenberg_certificate(int n) {
  if (n < 1) throw std::invalid_argument("heisenberg_certificate: n >= 1");
  constexpr int kG = 0, kH = 1;
  Word w;
  w.append(kG, +1, static_cast<std::size_t>(n));
  w.append(kH, +1, static_cast<std::size_t>(n));
  w.append(kG, -1, static_cast<std::size_t>(n));
  w.append(kH, -1, static_cast<std::size_t>(n));

  Certificate cert;
  cert.group = "heis";
  cert.power = BigInt(n) * n;
  cert.target_key = HeisElt{0, 0, BigInt(n) * n}.key();
  cert.word = std::move(w);
  cert.tokens = cert.word.token_count();
  cert.verified = false;
  return cert;
}

}  // namespace disto
