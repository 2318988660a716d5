#pragma once

#include <string>

#include "pipefit/fittings.hpp"
#include "pipefit/geometry.hpp"
#include "pipefit/joint.hpp"

namespace pipefit {

/// Physical sizes of a solid built with a given edge length. All fields are
/// in the caller's length unit.
struct SizeReport {
  SolidKind kind{};
  double edge_length = 0;
  double standing_height = 0;             // resting on a face
  double second_row_height = 0;           // top of the side openings
  double interior_standing_diameter = 0;  // 2 * face inradius * L
  double overall_diameter = 0;            // 2 * circumradius * L
  double base_diameter = 0;               // 2 * face circumradius * L
};

struct BillOfMaterials {
  SolidKind kind{};
  std::string hub_name;
  std::string elbow_name;  // "none" for elbow-free joints
  double edge_length = 0;
  int hub_count = 0;
  int elbow_count = 0;
  int stub_count = 0;
  int edge_pipe_count = 0;
  double edge_cut_length = 0;
  double stub_cut_length = 0;
  std::string glue = "PVC cement, as needed";
};

/// Edge length that makes the solid stand `height` tall on a face.
double edge_length_for_height(SolidKind kind, double height);

SizeReport size_report(SolidKind kind, double edge_length);

/// Counts follow from V and E; cut lengths from the joint geometry. Joints
/// with a straight-through choice need neither elbows nor stubs.
/// Throws ArityMismatch and NonpositiveCut.
BillOfMaterials bill_of_materials(SolidKind kind, const HubFitting& hub, const ElbowChoice& choice,
                                  double edge_length);

}  // namespace pipefit
