#pragma once

// As-built simulation: what a face loop does when every corner is built at
// the realized (catalog elbow) angle instead of the ideal one, and how much
// each corner has to flex for the loop to close again.

#include <span>
#include <vector>

#include "pipefit/fittings.hpp"
#include "pipefit/geometry.hpp"

namespace pipefit {

struct ClosureResult {
  double position_gap = 0;     // length
  double orientation_gap = 0;  // radians, in [0, pi]
  double per_corner_angle = 0;
};

/// Planar turtle walk: n edges of length L, turning pi - interior_angle at
/// each corner, composed as rigid motions. Gaps compare end pose to start.
ClosureResult face_loop_walk(int n, double edge_length, double interior_angle);

/// Same walk with an individual interior angle per corner.
ClosureResult face_loop_walk(double edge_length, std::span<const double> interior_angles);

/// Walk vertices (n + 1 points, z = 0), start point first.
std::vector<Vec3> face_loop_points(int n, double edge_length, double interior_angle);

struct AsBuiltSummary {
  double bend = 0;
  double realized_face_angle = 0;
  std::vector<ClosureResult> faces;  // one per polyhedron face, in face order
  double max_position_gap = 0;       // normalized by L
  double mean_position_gap = 0;      // normalized by L
  double max_orientation_gap = 0;
  double mean_orientation_gap = 0;
};

/// Walks every face of the solid with the interior angle realized by `bend`.
/// Throws ArityMismatch / OutOfRange.
AsBuiltSummary assemble_asbuilt(SolidKind kind, const HubFitting& hub, double bend, double edge_length);

struct FlexSolution {
  std::vector<double> per_joint_flex;  // radians added to each corner
  double residual = 0;                 // position gap after flex, length
  double objective = 0;                // closure cost + lambda * sum(flex^2)
  double lambda = 0;
  int iterations = 0;
  bool converged = false;
};

/// Damped Gauss-Newton closure of an n-gon built with a uniform interior
/// angle. Starts from zero flex; deterministic.
FlexSolution compensate(int n, double edge_length, double interior_angle, double lambda);

/// General form with one realized angle per corner.
FlexSolution compensate(double edge_length, std::span<const double> interior_angles, double lambda);

}  // namespace pipefit
