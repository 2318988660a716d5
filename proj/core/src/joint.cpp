#include "pipefit/joint.hpp"

#include <cmath>
#include <string>

#include <fmt/format.h>

#include "pipefit/angles.hpp"
#include "pipefit/error.hpp"

namespace pipefit {

JointSolution solve_joint(const VertexFigure& vf, const HubFitting& hub) {
  if (hub.arm_count != vf.q)
    throw Error(ErrorKind::ArityMismatch,
                fmt::format("arity mismatch: hub '{}' has {} arms but the vertex joins {} edges",
                            hub.name, hub.arm_count, vf.q));
  if (!(std::abs(vf.beta) > 0.0))
    throw Error(ErrorKind::Degenerate, "degenerate vertex: edge-to-axis angle is zero");

  JointSolution j;
  j.alpha = hub.arm_axis_angle;
  j.beta = vf.beta;
  j.arm_length = hub.arm_length;
  j.delta = j.alpha - j.beta;
  const double s = std::sin(j.beta);
  j.extension = hub.arm_length * std::sin(j.alpha) / s;
  j.offset = hub.arm_length * std::sin(j.delta) / s;
  return j;
}

ElbowChoice select_elbow(double delta, const Catalog& catalog) {
  if (catalog.elbows.empty()) throw Error(ErrorKind::EmptyCatalog, "catalog has no elbows");

  const double target = std::abs(delta);
  ElbowChoice choice;
  if (target <= kGeomTol) {
    choice.elbow = ElbowFitting{"none", 0.0, 0.0, 0.0};
    choice.error = -delta;
    return choice;
  }

  const ElbowFitting* best = nullptr;
  double best_gap = 0;
  for (const auto& e : catalog.elbows) {
    const double gap = std::abs(e.bend_angle - target);
    const bool tie = best && std::abs(gap - best_gap) <= 1e-12;
    if (!best || (!tie && gap < best_gap) || (tie && e.bend_angle < best->bend_angle)) {
      best = &e;
      best_gap = gap;
    }
  }
  choice.elbow = *best;
  choice.error = choice.signed_bend(delta) - delta;
  return choice;
}

ElbowChoice choose_elbow(const VertexFigure& vf, const HubFitting& hub, const Catalog& catalog) {
  const auto joint = solve_joint(vf, hub);
  auto choice = select_elbow(joint.delta, catalog);
  const double gamma = realized_vertex(vf, hub, choice.signed_bend(joint.delta));
  choice.face_angle_realized = gamma;
  choice.face_angle_error = gamma - vf.gamma;
  return choice;
}

double realized_vertex(const VertexFigure& vf, const HubFitting& hub, double bend) {
  const double beta = hub.arm_axis_angle - bend;
  if (!(beta > 0.0 && beta <= kPi / 2.0 + 1e-12))
    throw Error(ErrorKind::OutOfRange,
                fmt::format("bend {:.4f} deg leaves an edge-to-axis angle of {:.4f} deg, outside (0, 90]",
                            rad_to_deg(bend), rad_to_deg(beta)));
  const double s = std::min(1.0, std::sin(beta) * std::sin(kPi / vf.q));
  return 2.0 * std::asin(s);
}

namespace {

double require_positive(double cut, const char* what) {
  if (!(cut > 0.0))
    throw Error(ErrorKind::NonpositiveCut,
                fmt::format("{} cut length would be {:.4f}; the fittings use up the whole length", what, cut));
  return cut;
}

}  // namespace

double edge_cut_length(double edge_length, const JointSolution& joint, const ElbowFitting& elbow) {
  return require_positive(edge_length - 2.0 * joint.extension - 2.0 * elbow.takeoff +
                              2.0 * elbow.socket_depth,
                          "edge");
}

double stub_cut_length(const HubFitting& hub, const ElbowFitting& elbow) {
  // Hub socket mouth is taken to sit at the hub center.
  constexpr double hub_mouth = 0.0;
  return require_positive(
      hub.arm_length - hub_mouth - elbow.takeoff + hub.socket_depth + elbow.socket_depth, "stub");
}

double direct_edge_cut_length(double edge_length, const HubFitting& hub) {
  return require_positive(edge_length + 2.0 * hub.socket_depth, "edge");
}

}  // namespace pipefit
