#pragma once

// Joint geometry for a hub + elbows standing in for a polyhedron vertex.
//
// The hub sits on the vertex's symmetry axis. Each arm leaves the hub at
// alpha from the inward axis and ends at an elbow center X; the elbow turns
// the pipe onto the true edge line. Triangle (v, hub center, X) has angles
// beta at v, pi - alpha at the hub and delta = alpha - beta at X, which gives
// every length below by the law of sines.

#include <optional>
#include <vector>

#include "pipefit/fittings.hpp"
#include "pipefit/geometry.hpp"

namespace pipefit {

struct JointSolution {
  double delta = 0;      // required elbow bend, signed (alpha - beta)
  double offset = 0;     // hub center to true vertex along the axis (h)
  double extension = 0;  // true vertex to elbow center along the edge (e)
  double beta = 0;
  double alpha = 0;
  double arm_length = 0;
};

struct ElbowChoice {
  ElbowFitting elbow;
  double error = 0;  // signed chosen bend minus required delta
  /// Set when the vertex figure and hub are known (see choose_elbow).
  std::optional<double> face_angle_realized;
  std::optional<double> face_angle_error;

  /// True when the joint is exact without any elbow (delta == 0).
  bool straight() const noexcept { return elbow.bend_angle == 0.0; }
  /// Bend actually applied, carrying the sign of delta.
  double signed_bend(double delta) const noexcept {
    return delta < 0 ? -elbow.bend_angle : elbow.bend_angle;
  }
};

/// Throws ArityMismatch when hub.arm_count != vf.q, Degenerate when beta == 0.
JointSolution solve_joint(const VertexFigure& vf, const HubFitting& hub);

/// Catalog elbow whose bend is closest to |delta|; ties go to the smaller
/// bend. A joint with |delta| <= 1e-9 needs no elbow and gets a zero-bend
/// straight-through pseudo fitting named "none".
ElbowChoice select_elbow(double delta, const Catalog& catalog);

/// solve_joint + select_elbow, with the realized face angle filled in.
ElbowChoice choose_elbow(const VertexFigure& vf, const HubFitting& hub, const Catalog& catalog);

/// Face angle produced when the elbows bend by `bend` (signed) instead of the
/// exact delta: beta' = alpha - bend, gamma' = 2 asin(sin beta' sin(pi/q)).
/// Throws OutOfRange unless alpha - bend is in (0, pi/2].
double realized_vertex(const VertexFigure& vf, const HubFitting& hub, double bend);

/// Pipe length between two elbows for a polyhedron edge of length L.
/// Throws NonpositiveCut.
double edge_cut_length(double edge_length, const JointSolution& joint, const ElbowFitting& elbow);

/// Pipe between a hub socket and an elbow. Throws NonpositiveCut.
double stub_cut_length(const HubFitting& hub, const ElbowFitting& elbow);

/// Edge pipe when the hub arms already lie on the edges (no elbows).
double direct_edge_cut_length(double edge_length, const HubFitting& hub);

}  // namespace pipefit
