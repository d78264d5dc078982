#pragma once

// GroupOracle concept: the minimal exact interface the word-metric layer
// needs from a model group. canonical_key must be injective on group
// elements -- BFS deduplication never touches floating point.

#include <concepts>
#include <stdexcept>
#include <string>
#include <vector>

#include "disto/word.hpp"

namespace disto {

template <class O>
concept GroupOracle = requires(const O& o, const typename O::Element& a,
                               const typename O::Element& b) {
  { o.identity() } -> std::same_as<typename O::Element>;
  { o.generators() } -> std::same_as<const std::vector<typename O::Element>&>;
  { o.multiply(a, b) } -> std::same_as<typename O::Element>;
  { o.invert(a) } -> std::same_as<typename O::Element>;
  { o.canonical_key(a) } -> std::same_as<std::string>;
};

template <GroupOracle O>
typename O::Element eval_word(const O& oracle, const Word& w) {
  const auto& gens = oracle.generators();
  auto acc = oracle.identity();
  for (const Token& t : w.tokens) {
    if (t.gen < 0 || static_cast<std::size_t>(t.gen) >= gens.size())
      throw std::out_of_range("eval_word: generator index " + std::to_string(t.gen) +
                              " out of range");
    const auto& g = gens[static_cast<std::size_t>(t.gen)];
    acc = oracle.multiply(acc, t.sgn >= 0 ? g : oracle.invert(g));
  }
  return acc;
}

}  // namespace disto
