#pragma once

#include <cmath>

namespace disto {

struct Vec2 {
  double x = 0.0, y = 0.0;

  friend Vec2 operator+(Vec2 u, Vec2 v) { return {u.x + v.x, u.y + v.y}; }
  friend Vec2 operator-(Vec2 u, Vec2 v) { return {u.x - v.x, u.y - v.y}; }
  friend Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
  friend Vec2 operator/(Vec2 v, double s) { return {v.x / s, v.y / s}; }
  friend bool operator==(Vec2 u, Vec2 v) { return u.x == v.x && u.y == v.y; }

  double norm() const { return std::hypot(x, y); }
  double sup_norm() const { return std::max(std::fabs(x), std::fabs(y)); }
};

inline double dist(Vec2 u, Vec2 v) { return (u - v).norm(); }

}  // namespace disto
