#pragma once

// Test-only reference computations. Nothing here calls into the code paths
// they are used to check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace pipefit::oracle {

/// Published coordinate sets, unscaled.
inline std::vector<Eigen::Vector3d> raw_coordinates(int which) {
  const double p = std::numbers::phi;
  std::vector<Eigen::Vector3d> v;
  switch (which) {
    case 0:  // tetrahedron
      v = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
      break;
    case 1:  // cube
      for (int i = 0; i < 8; ++i) v.emplace_back(i & 1 ? 1 : -1, i & 2 ? 1 : -1, i & 4 ? 1 : -1);
      break;
    case 2:  // octahedron
      v = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
      break;
    case 3:  // dodecahedron
      for (int i = 0; i < 8; ++i) v.emplace_back(i & 1 ? 1 : -1, i & 2 ? 1 : -1, i & 4 ? 1 : -1);
      for (int s = 0; s < 4; ++s) {
        const double a = s & 1 ? 1 : -1, b = s & 2 ? 1 : -1;
        v.emplace_back(0, a / p, b * p);
        v.emplace_back(a / p, b * p, 0);
        v.emplace_back(a * p, 0, b / p);
      }
      break;
    default:  // icosahedron
      for (int s = 0; s < 4; ++s) {
        const double a = s & 1 ? 1 : -1, b = s & 2 ? 1 : -1;
        v.emplace_back(0, a, b * p);
        v.emplace_back(a, b * p, 0);
        v.emplace_back(a * p, 0, b);
      }
  }
  return v;
}

/// Brute force: neighbors are the vertices at minimum distance; the outward
/// axis is the position vector (the sets are centered on the origin). Returns
/// the angle between every edge and the inward axis at vertex v.
inline std::vector<double> brute_force_edge_axis_angles(int which, int v) {
  const auto pts = raw_coordinates(which);
  double dmin = std::numeric_limits<double>::infinity();
  for (std::size_t w = 0; w < pts.size(); ++w)
    if (static_cast<int>(w) != v) dmin = std::min(dmin, (pts[w] - pts[v]).norm());
  std::vector<double> out;
  const Eigen::Vector3d inward = -pts[v].normalized();
  for (std::size_t w = 0; w < pts.size(); ++w) {
    if (static_cast<int>(w) == v) continue;
    const Eigen::Vector3d d = pts[w] - pts[v];
    if (std::abs(d.norm() - dmin) > 1e-9 * dmin) continue;
    out.push_back(std::acos(std::clamp(d.normalized().dot(inward), -1.0, 1.0)));
  }
  return out;
}

/// Planar walk with complex numbers: heading turns by pi - interior angle
/// after each edge. Returns the end point; the start is the origin.
inline std::complex<double> walk_end(double edge, const std::vector<double>& interior) {
  std::complex<double> pos = 0.0, heading = 1.0;
  for (double a : interior) {
    pos += edge * heading;
    heading *= std::polar(1.0, std::numbers::pi - a);
  }
  return pos;
}

inline double walk_total_turn(const std::vector<double>& interior) {
  double t = 0;
  for (double a : interior) t += std::numbers::pi - a;
  return t;
}

}  // namespace pipefit::oracle
