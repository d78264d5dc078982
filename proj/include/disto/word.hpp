#pragma once

// Words in a finitely generated group: sequences of (generator index, sign)
// tokens, evaluated left to right. A Certificate bundles a word with the
// power it is claimed to represent and the canonical key of the target.

#include <cstddef>
#include <string>
#include <vector>

#include "disto/bigint.hpp"

namespace disto {

struct Token {
  int gen = 0;   // index into the oracle's generator list
  int sgn = +1;  // +1 generator, -1 its inverse

  friend bool operator==(const Token& s, const Token& t) {
    return s.gen == t.gen && s.sgn == t.sgn;
  }
};

struct Word {
  std::vector<Token> tokens;

  std::size_t token_count() const { return tokens.size(); }

  void append(int gen, int sgn, std::size_t repeat = 1) {
    for (std::size_t i = 0; i < repeat; ++i) tokens.push_back({gen, sgn});
  }

  friend Word operator+(const Word& u, const Word& v) {
    Word w = u;
    w.tokens.insert(w.tokens.end(), v.tokens.begin(), v.tokens.end());
    return w;
  }

  friend bool operator==(const Word& u, const Word& v) { return u.tokens == v.tokens; }
};

struct Certificate {
  std::string group;       // "mess", "heis", "psl2sqrt2", ...
  BigInt power{0};         // the word represents f^power for the distorted f
  std::string target_key;  // canonical key of the target element
  Word word;
  std::size_t tokens = 0;
  bool verified = false;
};

}  // namespace disto
