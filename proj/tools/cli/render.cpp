#include "cli/render.hpp"

#include <string_view>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "pipefit/angles.hpp"

namespace pipefit::cli {

using nlohmann::json;

namespace {

std::string deg(double rad) { return fmt::format("{:.2f} deg", rad_to_deg(rad)); }
std::string signed_deg(double rad) { return fmt::format("{:+.2f} deg", rad_to_deg(rad)); }

std::string len(double v, std::string_view unit) {
  return unit.empty() ? fmt::format("{:.3f}", v) : fmt::format("{:.3f} {}", v, unit);
}

void line(std::ostream& out, std::string_view label, std::string_view value) {
  fmt::print(out, "{:<28}{}\n", fmt::format("{}:", label), value);
}

std::string str(SolidKind k) { return std::string(to_string(k)); }

}  // namespace

MetricsReport make_metrics_report(SolidKind kind) {
  const auto& p = platonic_solid(kind);
  return MetricsReport{kind, solid_counts(kind), polyhedron_metrics(p), vertex_figure(p, 0)};
}

// ---------------------------------------------------------------------------
// text

void render_text(const MetricsReport& r, std::ostream& out) {
  const auto& m = r.metrics;
  line(out, "solid", str(r.kind));
  line(out, "vertices/edges/faces",
       fmt::format("{}/{}/{}", r.counts.vertices, r.counts.edges, r.counts.faces));
  line(out, "edges per vertex", fmt::format("{}", r.vertex.q));
  line(out, "face angle", deg(r.vertex.gamma));
  line(out, "edge-to-axis angle", deg(r.vertex.beta));
  out << "per unit edge:\n";
  line(out, "  inradius", fmt::format("{:.3f}", m.inradius));
  line(out, "  circumradius", fmt::format("{:.3f}", m.circumradius));
  line(out, "  face inradius", fmt::format("{:.3f}", m.face_inradius));
  line(out, "  face circumradius", fmt::format("{:.3f}", m.face_circumradius));
  line(out, "  dihedral angle", deg(m.dihedral_angle));
  line(out, "  second row height", fmt::format("{:.3f}", m.second_row_height));
  line(out, "  resting height", fmt::format("{:.3f}", m.resting_height));
}

void render_text(const JointReport& r, std::ostream& out) {
  line(out, "solid", str(r.kind));
  line(out, "hub", fmt::format("{} ({} arms, arm-to-axis {}, arm {})", r.hub.name, r.hub.arm_count,
                               deg(r.hub.arm_axis_angle), len(r.hub.arm_length, r.unit)));
  line(out, "edge-to-axis angle", deg(r.joint.beta));
  line(out, "required elbow", deg(r.joint.delta));
  if (r.choice.straight()) {
    line(out, "chosen elbow", "none (hub arms lie on the edges)");
  } else {
    line(out, "chosen elbow", fmt::format("{} ({}), error {}", r.choice.elbow.name,
                                          deg(r.choice.elbow.bend_angle), signed_deg(r.choice.error)));
  }
  if (r.choice.face_angle_realized) {
    line(out, "realized face angle",
         fmt::format("{} (ideal {}, error {})", deg(*r.choice.face_angle_realized),
                     deg(r.vertex.gamma), signed_deg(r.choice.face_angle_error.value_or(0.0))));
  }
  line(out, "vertex offset", len(r.joint.offset, r.unit));
  line(out, "edge extension", len(r.joint.extension, r.unit));
}

void render_text(const SizeView& v, std::ostream& out) {
  const auto& r = v.report;
  line(out, "solid", str(r.kind));
  if (v.requested_height) line(out, "target height", len(*v.requested_height, v.unit));
  line(out, "edge length", len(r.edge_length, v.unit));
  line(out, "standing height", len(r.standing_height, v.unit));
  line(out, "second row height", len(r.second_row_height, v.unit));
  line(out, "interior standing diameter", len(r.interior_standing_diameter, v.unit));
  line(out, "overall diameter", len(r.overall_diameter, v.unit));
  line(out, "base diameter", len(r.base_diameter, v.unit));
}

void render_text(const BomView& v, std::ostream& out) {
  const auto& b = v.bom;
  line(out, "solid", str(b.kind));
  line(out, "edge length", len(b.edge_length, v.size_unit));
  line(out, "hubs", fmt::format("{} x {}", b.hub_count, b.hub_name));
  if (b.elbow_count > 0) {
    line(out, "elbows", fmt::format("{} x {}", b.elbow_count, b.elbow_name));
    line(out, "stubs", fmt::format("{} x {}", b.stub_count, len(b.stub_cut_length, v.fitting_unit)));
  } else {
    line(out, "elbows", "0");
    line(out, "stubs", "0");
  }
  line(out, "edge pipes", fmt::format("{} x {}", b.edge_pipe_count, len(b.edge_cut_length, v.fitting_unit)));
  line(out, "glue", b.glue);
}

void render_text(const SimulationReport& r, std::ostream& out) {
  line(out, "solid", str(r.kind));
  line(out, "hub", r.hub_name);
  line(out, "elbow bend", fmt::format("{} ({})", deg(r.asbuilt.bend), r.elbow_name));
  line(out, "realized face angle", fmt::format("{} (ideal {}, error {})", deg(r.asbuilt.realized_face_angle),
                                               deg(r.ideal_face_angle),
                                               signed_deg(r.asbuilt.realized_face_angle - r.ideal_face_angle)));
  line(out, "edge length", len(r.edge_length, r.unit));
  line(out, "face closure gap", fmt::format("{} position, {} orientation",
                                            len(r.face_walk.position_gap, r.unit),
                                            deg(r.face_walk.orientation_gap)));
  line(out, "faces walked", fmt::format("{}", r.asbuilt.faces.size()));
  line(out, "max gap per edge length", fmt::format("{:.6f}", r.asbuilt.max_position_gap));
  line(out, "mean gap per edge length", fmt::format("{:.6f}", r.asbuilt.mean_position_gap));
  line(out, "compensation lambda", fmt::format("{:g}", r.flex.lambda));
  std::string flex;
  for (double f : r.flex.per_joint_flex) flex += (flex.empty() ? "" : " ") + signed_deg(f);
  line(out, "flex per corner", flex);
  line(out, "residual gap", fmt::format("{:.3e}", r.flex.residual));
  line(out, "iterations", fmt::format("{} ({})", r.flex.iterations,
                                       r.flex.converged ? "converged" : "not converged"));
}

// ---------------------------------------------------------------------------
// json

json to_json(const MetricsReport& r) {
  const auto& m = r.metrics;
  return json{
      {"solid", str(r.kind)},
      {"vertex_count", r.counts.vertices},
      {"edge_count", r.counts.edges},
      {"face_count", r.counts.faces},
      {"q", r.vertex.q},
      {"gamma_deg", rad_to_deg(r.vertex.gamma)},
      {"beta_deg", rad_to_deg(r.vertex.beta)},
      {"inradius", m.inradius},
      {"circumradius", m.circumradius},
      {"face_inradius", m.face_inradius},
      {"face_circumradius", m.face_circumradius},
      {"dihedral_angle_deg", rad_to_deg(m.dihedral_angle)},
      {"second_row_height", m.second_row_height},
      {"resting_height", m.resting_height},
  };
}

json to_json(const JointReport& r) {
  json j{
      {"solid", str(r.kind)},
      {"hub", r.hub.name},
      {"arm_count", r.hub.arm_count},
      {"alpha_deg", rad_to_deg(r.joint.alpha)},
      {"beta_deg", rad_to_deg(r.joint.beta)},
      {"gamma_deg", rad_to_deg(r.vertex.gamma)},
      {"required_bend_deg", rad_to_deg(r.joint.delta)},
      {"chosen_elbow", r.choice.elbow.name},
      {"chosen_bend_deg", rad_to_deg(r.choice.elbow.bend_angle)},
      {"bend_error_deg", rad_to_deg(r.choice.error)},
      {"arm_length", r.joint.arm_length},
      {"offset", r.joint.offset},
      {"extension", r.joint.extension},
      {"unit", r.unit},
  };
  if (r.choice.face_angle_realized) {
    j["face_angle_realized_deg"] = rad_to_deg(*r.choice.face_angle_realized);
    j["face_angle_error_deg"] = rad_to_deg(r.choice.face_angle_error.value_or(0.0));
  }
  return j;
}

json to_json(const SizeView& v) {
  const auto& r = v.report;
  json j{
      {"solid", str(r.kind)},
      {"edge_length", r.edge_length},
      {"standing_height", r.standing_height},
      {"second_row_height", r.second_row_height},
      {"interior_standing_diameter", r.interior_standing_diameter},
      {"overall_diameter", r.overall_diameter},
      {"base_diameter", r.base_diameter},
      {"unit", v.unit},
  };
  if (v.requested_height) j["requested_height"] = *v.requested_height;
  return j;
}

json to_json(const BomView& v) {
  const auto& b = v.bom;
  return json{
      {"solid", str(b.kind)},
      {"hub", b.hub_name},
      {"elbow", b.elbow_name},
      {"edge_length", b.edge_length},
      {"unit", v.size_unit},
      {"cut_unit", v.fitting_unit},
      {"hub_count", b.hub_count},
      {"elbow_count", b.elbow_count},
      {"stub_count", b.stub_count},
      {"edge_pipe_count", b.edge_pipe_count},
      {"edge_cut_length", b.edge_cut_length},
      {"stub_cut_length", b.stub_cut_length},
      {"glue", b.glue},
  };
}

json to_json(const SimulationReport& r) {
  json flex = json::array();
  for (double f : r.flex.per_joint_flex) flex.push_back(rad_to_deg(f));
  return json{
      {"solid", str(r.kind)},
      {"hub", r.hub_name},
      {"elbow", r.elbow_name},
      {"bend_deg", rad_to_deg(r.asbuilt.bend)},
      {"ideal_face_angle_deg", rad_to_deg(r.ideal_face_angle)},
      {"realized_face_angle_deg", rad_to_deg(r.asbuilt.realized_face_angle)},
      {"edge_length", r.edge_length},
      {"unit", r.unit},
      {"position_gap", r.face_walk.position_gap},
      {"orientation_gap_deg", rad_to_deg(r.face_walk.orientation_gap)},
      {"face_count", r.asbuilt.faces.size()},
      {"max_position_gap_per_edge", r.asbuilt.max_position_gap},
      {"mean_position_gap_per_edge", r.asbuilt.mean_position_gap},
      {"max_orientation_gap_deg", rad_to_deg(r.asbuilt.max_orientation_gap)},
      {"lambda", r.flex.lambda},
      {"per_joint_flex_deg", flex},
      {"residual", r.flex.residual},
      {"objective", r.flex.objective},
      {"iterations", r.flex.iterations},
      {"converged", r.flex.converged},
  };
}

}  // namespace pipefit::cli
