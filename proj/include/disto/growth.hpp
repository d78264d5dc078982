#pragma once

// Exponential growth rate of curves under iteration, the crossing-count
// functional L on annulus arcs (how many integer translates of a
// transversal the arc spans, minus the boundary pair), the spread
// envelope L(f^n a)/n, the gamma-independence bound |dL| <= 2J, and the
// empirical word-length growth bound L(w a) <= L(a) + C|w|.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "disto/curves.hpp"
#include "disto/lift.hpp"
#include "disto/word.hpp"

namespace disto {

struct LengthOverflow : std::runtime_error {
  int n_reached;
  LengthOverflow(int n, double cap)
      : std::runtime_error("LengthOverflow: curve length exceeded cap " +
                           std::to_string(cap) + " at n = " + std::to_string(n)),
        n_reached(n) {}
};

struct GrowthRow {
  int n = 0;
  double measure = 0.0;   // curve length (egr) or crossing count L (spread)
  double value = 0.0;     // log(length)/n, or L/n
  double envelope = 0.0;  // running minimum; NaN before the envelope start
};

// log(l(f^n tau))/n for n = 1..n_max with the running minimum taken from
// n = n_max/2 onward (liminf semantics at desk scale; small-n transients
// are not allowed to pin the envelope).
std::vector<GrowthRow> egr(const Lift& lift, const PolyCurve& curve, int n_max,
                           double max_seg = 1e-2, double length_cap = 1e12);

// Crossing count against the vertical lines x = i: with the met set
// {m..M} (closed intersection), a = m-1, b = M+1 and L = max{0, b-a-2}.
long crossing_count_L(const Arc& arc);

// Same quantity against the integer translates of an arbitrary
// boundary-to-boundary transversal polyline.
long transversal_crossing_L(const Arc& arc, const std::vector<Vec2>& gamma);

// Per-n ratios L(f^n a)/n with running-minimum envelope.
std::vector<GrowthRow> spread(const Lift& lift, const Arc& arc, int n_max,
                              double max_seg = 1e-2);

struct GammaIndependenceReport {
  bool ok = false;
  long max_abs_delta = 0;
};

// Checks |L_{gamma'}(a) - L_{gamma}(a)| <= 2J over the family, where
// gamma' lies between the translates indexed j and j+J of the standard
// vertical transversal.
GammaIndependenceReport gamma_independence_check(const std::vector<Arc>& arcs,
                                                 const std::vector<Vec2>& gamma_prime,
                                                 int J);

struct TlenGrowthReport {
  double c_hat = 0.0;     // max over sampled words of (L(w a) - L(a))/|w|
  double c_single = 0.0;  // max increment over single generators
  bool pass = false;      // no sampled word beats per-letter additivity
};

// Generators are (forward, inverse) lift pairs; each must be equivariant
// and fix the endpoints of the vertical transversal modulo the deck
// translation.
TlenGrowthReport tlen_growth_check(const std::vector<std::pair<Lift, Lift>>& generators,
                                   const Arc& arc, const std::vector<Word>& words,
                                   double max_seg = 1e-2);

}  // namespace disto
