#include "pipefit/sizing.hpp"

#include <array>

namespace pipefit {

namespace {

const PolyhedronMetrics& unit_metrics(SolidKind kind) {
  static const std::array<PolyhedronMetrics, 5> cache = [] {
    std::array<PolyhedronMetrics, 5> m;
    for (SolidKind k : kAllSolids) m[static_cast<std::size_t>(k)] = polyhedron_metrics(platonic_solid(k));
    return m;
  }();
  return cache[static_cast<std::size_t>(kind)];
}

}  // namespace

double edge_length_for_height(SolidKind kind, double height) {
  return height / unit_metrics(kind).resting_height;
}

SizeReport size_report(SolidKind kind, double edge_length) {
  const auto& m = unit_metrics(kind);
  SizeReport r;
  r.kind = kind;
  r.edge_length = edge_length;
  r.standing_height = m.resting_height * edge_length;
  r.second_row_height = m.second_row_height * edge_length;
  r.interior_standing_diameter = 2.0 * m.face_inradius * edge_length;
  r.overall_diameter = 2.0 * m.circumradius * edge_length;
  r.base_diameter = 2.0 * m.face_circumradius * edge_length;
  return r;
}

BillOfMaterials bill_of_materials(SolidKind kind, const HubFitting& hub, const ElbowChoice& choice,
                                  double edge_length) {
  const auto counts = solid_counts(kind);
  const auto joint = solve_joint(ideal_vertex_figure(kind), hub);

  BillOfMaterials bom;
  bom.kind = kind;
  bom.hub_name = hub.name;
  bom.elbow_name = choice.elbow.name;
  bom.edge_length = edge_length;
  bom.hub_count = counts.vertices;
  bom.edge_pipe_count = counts.edges;
  if (choice.straight()) {
    bom.edge_cut_length = direct_edge_cut_length(edge_length, hub);
  } else {
    bom.elbow_count = 2 * counts.edges;
    bom.stub_count = 2 * counts.edges;
    bom.edge_cut_length = edge_cut_length(edge_length, joint, choice.elbow);
    bom.stub_cut_length = stub_cut_length(hub, choice.elbow);
  }
  return bom;
}

}  // namespace pipefit
