#include "disto/models/calegari.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace disto {

PlaneAction calegari_action(double alpha) {
  if (alpha == 0.0) throw std::invalid_argument("calegari_action: alpha must be nonzero");
  PlaneAction action;
  action.G = AffinePlaneMap{BigRational(1), BigRational(0), BigRational(0), BigRational(0)};
  action.H = AffinePlaneMap{BigRational(0), BigRational(0), BigRational(0), BigRational(1)};
  action.F = AffinePlaneMap{BigRational(0), BigRational(1), BigRational(0), BigRational(0)};
  action.alpha = alpha;
  return action;
}

bool commutator_equals_F(const PlaneAction& action) {
  return affine_commutator(action.G, action.H) == action.F;
}

bool quotient_compatible(const PlaneAction& action) {
  const AffinePlaneMap t_alpha{BigRational(0), BigRational(0), BigRational(1), BigRational(0)};
  const std::vector<AffinePlaneMap> probes = {
      action.G, action.H, action.F, action.G * action.H,
      action.H * action.F.inverse(), action.G.inverse() * action.H * action.G};
  for (const auto& f : probes)
    if (!(f * t_alpha == t_alpha * f)) return false;
  return true;
}

Lift fiber_rotation_lift(const PlaneAction& action) {
  // On the y = 0 fiber F descends to x -> x + 1 on R/(alpha Z); in
  // u = x/alpha coordinates that is the rigid rotation by 1/alpha.
  std::ostringstream spec;
  spec << std::setprecision(17) << "calegari-fiber:" << action.alpha;
  return make_lift(spec.str());
}

}  // namespace disto
