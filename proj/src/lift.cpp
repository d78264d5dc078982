#include "disto/lift.hpp"

#include <numbers>
#include <sstream>

#include "disto/rotation.hpp"

namespace disto {

std::vector<Vec2> deck_vectors(CoverSpace space) {
  switch (space) {
    case CoverSpace::Circle:
    case CoverSpace::Annulus:
      return {{1.0, 0.0}};
    case CoverSpace::Torus:
      return {{1.0, 0.0}, {0.0, 1.0}};
  }
  return {};
}

Vec2 reduce_to_fundamental(CoverSpace space, Vec2 p) {
  Vec2 r = p;
  r.x -= std::floor(r.x);
  if (space == CoverSpace::Torus) r.y -= std::floor(r.y);
  return r;
}

double equivariance_residual(const Lift& lift, int grid) {
  double worst = 0.0;
  const auto decks = deck_vectors(lift.space);
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      Vec2 p{static_cast<double>(i) / grid, static_cast<double>(j) / grid};
      if (lift.space == CoverSpace::Circle) p.y = 0.0;
      Vec2 fp = lift(p);
      for (Vec2 m : decks) {
        Vec2 lhs = lift(p + m);
        Vec2 rhs = fp + lift.deck_image(m);
        worst = std::max(worst, (lhs - rhs).norm());
      }
      if (lift.space == CoverSpace::Annulus) {
        // Boundary lines y = 0 and y = 1 must be preserved setwise.
        Vec2 bottom = lift({p.x, 0.0});
        Vec2 top = lift({p.x, 1.0});
        worst = std::max(worst, std::fabs(bottom.y));
        worst = std::max(worst, std::fabs(top.y - 1.0));
      }
    }
  }
  return worst;
}

void require_equivariant(const Lift& lift, double tol, int grid) {
  double r = equivariance_residual(lift, grid);
  if (!(r < tol))
    throw EquivarianceViolation("lift '" + lift.spec + "' violates its deck contract: residual " +
                                std::to_string(r));
}

namespace {

std::vector<double> parse_params(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stod(item));
  }
  return out;
}

struct SpecParts {
  std::string name;
  std::vector<double> params;
};

SpecParts split_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) return {spec, {}};
  return {spec.substr(0, colon), parse_params(spec.substr(colon + 1))};
}

Lift circle_lift(std::string spec, std::function<double(double)> f) {
  Lift l;
  l.space = CoverSpace::Circle;
  l.spec = std::move(spec);
  l.map = [f = std::move(f)](Vec2 p) { return Vec2{f(p.x), 0.0}; };
  return l;
}

void need(const SpecParts& p, std::size_t count) {
  if (p.params.size() != count)
    throw UnknownRegistryName(p.name + " (expected " + std::to_string(count) + " parameters)");
}

}  // namespace

Lift make_lift(const std::string& spec) {
  const SpecParts p = split_spec(spec);
  const auto& a = p.params;

  if (p.name == "identity-circle") return circle_lift(spec, [](double x) { return x; });
  if (p.name == "rigid") {
    need(p, 1);
    double c = a[0];
    return circle_lift(spec, [c](double x) { return x + c; });
  }
  if (p.name == "sine") {
    need(p, 1);
    double amp = a[0];
    return circle_lift(spec, [amp](double x) {
      return x + amp * std::sin(2.0 * std::numbers::pi * x);
    });
  }
  if (p.name == "projmat") {
    need(p, 4);
    return projectivized_circle_map({a[0], a[1], a[2], a[3]});
  }
  if (p.name == "parabolic-rp1") return projectivized_circle_map({1.0, 1.0, 0.0, 1.0});
  if (p.name == "rotation-rp1") {
    need(p, 1);
    double th = a[0];
    return projectivized_circle_map(
        {std::cos(th), -std::sin(th), std::sin(th), std::cos(th)});
  }
  if (p.name == "calegari-fiber") {
    need(p, 1);
    double alpha = a[0];
    double rho = 1.0 / alpha;
    return circle_lift(spec, [rho](double x) { return x + rho; });
  }

  if (p.name == "identity-annulus") {
    Lift l;
    l.space = CoverSpace::Annulus;
    l.spec = spec;
    l.map = [](Vec2 q) { return q; };
    return l;
  }
  if (p.name == "shear") {
    Lift l;
    l.space = CoverSpace::Annulus;
    l.spec = spec;
    l.map = [](Vec2 q) { return Vec2{q.x + q.y, q.y}; };
    return l;
  }
  if (p.name == "meanzero-shear") {
    Lift l;
    l.space = CoverSpace::Annulus;
    l.spec = spec;
    l.map = [](Vec2 q) { return Vec2{q.x + q.y - 0.5, q.y}; };
    return l;
  }
  if (p.name == "translation-x") {
    need(p, 1);
    double c = a[0];
    Lift l;
    l.space = CoverSpace::Annulus;
    l.spec = spec;
    l.map = [c](Vec2 q) { return Vec2{q.x + c, q.y}; };
    return l;
  }

  if (p.name == "identity-torus") {
    Lift l;
    l.space = CoverSpace::Torus;
    l.spec = spec;
    l.map = [](Vec2 q) { return q; };
    return l;
  }
  if (p.name == "translation") {
    need(p, 2);
    double vx = a[0], vy = a[1];
    Lift l;
    l.space = CoverSpace::Torus;
    l.spec = spec;
    l.map = [vx, vy](Vec2 q) { return Vec2{q.x + vx, q.y + vy}; };
    return l;
  }
  if (p.name == "shear-torus") {
    Lift l;
    l.space = CoverSpace::Torus;
    l.spec = spec;
    l.deck = {1, 1, 0, 1};
    l.map = [](Vec2 q) { return Vec2{q.x + q.y, q.y}; };
    return l;
  }
  if (p.name == "skew") {
    need(p, 1);
    double alpha = a[0];
    Lift l;
    l.space = CoverSpace::Torus;
    l.spec = spec;
    l.deck = {1, 0, 1, 1};
    l.map = [alpha](Vec2 q) { return Vec2{q.x + alpha, q.y + q.x}; };
    return l;
  }
  if (p.name == "matA" || p.name == "mat") {
    std::array<int, 4> m{2, 1, 1, 1};
    if (p.name == "mat") {
      need(p, 4);
      for (int i = 0; i < 4; ++i) m[static_cast<std::size_t>(i)] = static_cast<int>(a[static_cast<std::size_t>(i)]);
    }
    Lift l;
    l.space = CoverSpace::Torus;
    l.spec = spec;
    l.deck = m;
    l.map = [m](Vec2 q) {
      return Vec2{m[0] * q.x + m[1] * q.y, m[2] * q.x + m[3] * q.y};
    };
    return l;
  }

  throw UnknownRegistryName(spec);
}

Lift make_inverse_lift(const std::string& spec) {
  const SpecParts p = split_spec(spec);
  const auto& a = p.params;

  if (p.name == "identity-circle" || p.name == "identity-annulus" || p.name == "identity-torus")
    return make_lift(spec);
  if (p.name == "rigid") {
    need(p, 1);
    return make_lift("rigid:" + std::to_string(-a[0]));
  }
  if (p.name == "shear") {
    Lift l;
    l.space = CoverSpace::Annulus;
    l.spec = "shear^-1";
    l.map = [](Vec2 q) { return Vec2{q.x - q.y, q.y}; };
    return l;
  }
  if (p.name == "meanzero-shear") {
    Lift l;
    l.space = CoverSpace::Annulus;
    l.spec = "meanzero-shear^-1";
    l.map = [](Vec2 q) { return Vec2{q.x - q.y + 0.5, q.y}; };
    return l;
  }
  if (p.name == "translation-x") {
    need(p, 1);
    double c = a[0];
    Lift l;
    l.space = CoverSpace::Annulus;
    l.spec = "translation-x^-1";
    l.map = [c](Vec2 q) { return Vec2{q.x - c, q.y}; };
    return l;
  }
  if (p.name == "translation") {
    need(p, 2);
    double vx = a[0], vy = a[1];
    Lift l;
    l.space = CoverSpace::Torus;
    l.spec = "translation^-1";
    l.map = [vx, vy](Vec2 q) { return Vec2{q.x - vx, q.y - vy}; };
    return l;
  }
  if (p.name == "shear-torus") {
    Lift l;
    l.space = CoverSpace::Torus;
    l.spec = "shear-torus^-1";
    l.deck = {1, -1, 0, 1};
    l.map = [](Vec2 q) { return Vec2{q.x - q.y, q.y}; };
    return l;
  }
  throw UnknownRegistryName(spec + " (no registered inverse)");
}

}  // namespace disto
