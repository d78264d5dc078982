#pragma once

// Exact word metrics by frontier-by-frontier breadth-first search over
// Cayley balls. The table is keyed by canonical keys, so its content is a
// function of the group alone: exploration order, generator order and
// thread count cannot change it (all writers at a level write the same
// length, first writer wins).

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "disto/oracle.hpp"

namespace disto {

struct BallTooLarge : std::runtime_error {
  int radius_reached;
  std::size_t nodes_stored;
  std::vector<std::size_t> cumulative_sizes;  // per completed radius

  BallTooLarge(int radius, std::size_t nodes, std::vector<std::size_t> sizes)
      : std::runtime_error("BallTooLarge: node cap exceeded at radius " +
                           std::to_string(radius + 1) + " with " +
                           std::to_string(nodes) + " nodes stored"),
        radius_reached(radius),
        nodes_stored(nodes),
        cumulative_sizes(std::move(sizes)) {}
};

template <class Element>
struct CayleyBall {
  int radius = 0;
  std::unordered_map<std::string, int> lengths;   // canonical key -> word length
  std::unordered_map<std::string, Element> elements;
  std::vector<std::size_t> cumulative_sizes;      // cumulative_sizes[r] = #{ |g| <= r }
};

namespace detail {

// Symmetrized generator list: every generator and its inverse, each
// costing one token.
template <GroupOracle O>
std::vector<typename O::Element> symmetric_generators(const O& oracle) {
  std::vector<typename O::Element> sym = oracle.generators();
  const std::size_t n = sym.size();
  sym.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) sym.push_back(oracle.invert(sym[i]));
  return sym;
}

}  // namespace detail

// BFS out to `radius`, storing exact word lengths for every element it
// reaches. Throws BallTooLarge when the table would exceed node_cap; the
// exception carries the stats of the completed levels.
template <GroupOracle O>
CayleyBall<typename O::Element> cayley_ball(const O& oracle, int radius,
                                            std::size_t node_cap, int threads = 1) {
  using Element = typename O::Element;
  if (radius < 0) throw std::invalid_argument("cayley_ball: radius must be >= 0");
  if (node_cap == 0) throw std::invalid_argument("cayley_ball: node_cap must be > 0");
  if (threads < 1) threads = 1;

  CayleyBall<Element> ball;
  ball.radius = radius;
  const Element id = oracle.identity();
  ball.lengths.emplace(oracle.canonical_key(id), 0);
  ball.elements.emplace(oracle.canonical_key(id), id);
  ball.cumulative_sizes.push_back(1);

  const auto sym = detail::symmetric_generators(oracle);
  std::vector<Element> frontier{id};

  for (int r = 1; r <= radius && !frontier.empty(); ++r) {
    // Expand the frontier, in parallel when asked. Each worker emits its
    // candidates into a private buffer; the merge below is sequential and
    // set-like, so the resulting table does not depend on the partition.
    std::vector<std::vector<std::pair<std::string, Element>>> buffers(
        static_cast<std::size_t>(threads));
    auto expand = [&](std::size_t tid) {
      auto& out = buffers[tid];
      for (std::size_t i = tid; i < frontier.size(); i += static_cast<std::size_t>(threads)) {
        for (const Element& s : sym) {
          Element next = oracle.multiply(frontier[i], s);
          out.emplace_back(oracle.canonical_key(next), std::move(next));
        }
      }
    };
    if (threads == 1) {
      expand(0);
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(expand, static_cast<std::size_t>(t));
      for (auto& th : pool) th.join();
    }

    std::vector<Element> next_frontier;
    for (auto& buf : buffers) {
      for (auto& [key, elt] : buf) {
        if (ball.lengths.contains(key)) continue;
        if (ball.lengths.size() >= node_cap)
          throw BallTooLarge(r - 1, ball.lengths.size(),
                             std::vector<std::size_t>(ball.cumulative_sizes.begin(),
                                                      ball.cumulative_sizes.end()));
        ball.lengths.emplace(key, r);
        ball.elements.emplace(key, elt);
        next_frontier.push_back(std::move(elt));
      }
    }
    ball.cumulative_sizes.push_back(ball.lengths.size());
    frontier = std::move(next_frontier);
  }
  // Radii past the point where the group ran out of new elements.
  while (ball.cumulative_sizes.size() < static_cast<std::size_t>(radius) + 1)
    ball.cumulative_sizes.push_back(ball.lengths.size());
  return ball;
}

// Exact distance in the Cayley graph if it is <= radius, otherwise nullopt
// ("Unknown"). Searches level by level with early exit.
template <GroupOracle O>
std::optional<int> word_length_exact(const O& oracle, const typename O::Element& target,
                                     int radius, std::size_t node_cap, int threads = 1) {
  const std::string want = oracle.canonical_key(target);
  if (want == oracle.canonical_key(oracle.identity())) return 0;
  auto ball = cayley_ball(oracle, radius, node_cap, threads);
  auto it = ball.lengths.find(want);
  if (it == ball.lengths.end()) return std::nullopt;
  return it->second;
}

struct TlenRow {
  int n = 0;
  int length = 0;
  double ratio = 0.0;     // length / n, an upper bound for the translation length
  double envelope = 0.0;  // running minimum of the ratios
};

// Upper bounds |g^n|/n for the translation length, for every n <= n_max
// whose power is resolvable inside the radius-limited ball. The running
// minimum is a certified upper bound for the subadditive limit. Empty
// result = Unknown.
template <GroupOracle O>
std::vector<TlenRow> translation_length_estimate(const O& oracle,
                                                 const typename O::Element& g, int n_max,
                                                 int radius, std::size_t node_cap,
                                                 int threads = 1) {
  if (n_max < 1) throw std::invalid_argument("translation_length_estimate: n_max >= 1");
  auto ball = cayley_ball(oracle, radius, node_cap, threads);
  std::vector<TlenRow> rows;
  double env = std::numeric_limits<double>::infinity();
  auto power = oracle.identity();
  for (int n = 1; n <= n_max; ++n) {
    power = oracle.multiply(power, g);
    auto it = ball.lengths.find(oracle.canonical_key(power));
    if (it == ball.lengths.end()) continue;
    TlenRow row;
    row.n = n;
    row.length = it->second;
    row.ratio = static_cast<double>(it->second) / n;
    env = std::min(env, row.ratio);
    row.envelope = env;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace disto
