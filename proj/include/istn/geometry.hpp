#pragma once

#include <cmath>

namespace istn {

// 3D point in meters. Users live on the ground plane (z = 0), stations above it.
struct Position3D {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend bool operator==(const Position3D& a, const Position3D& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
};

inline double distance(const Position3D& a, const Position3D& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  const double dz = a.z - b.z;
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

// Ground-plane distance; used for cell membership and coverage tests.
inline double horizontal_distance(const Position3D& a, const Position3D& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

}  // namespace istn
