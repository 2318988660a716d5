#pragma once

// Report types produced by the subcommands and their text / JSON renderings.
// Text prints angles with 2 decimals and lengths with 3; JSON carries full
// precision, degrees for every angle and the unit label next to lengths.

#include <optional>
#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "pipefit/asbuilt.hpp"
#include "pipefit/fittings.hpp"
#include "pipefit/geometry.hpp"
#include "pipefit/joint.hpp"
#include "pipefit/sizing.hpp"

namespace pipefit::cli {

struct MetricsReport {
  SolidKind kind{};
  SolidCounts counts{};
  PolyhedronMetrics metrics;
  VertexFigure vertex;
};

struct JointReport {
  SolidKind kind{};
  HubFitting hub;
  VertexFigure vertex;
  JointSolution joint;
  ElbowChoice choice;
  std::string unit;
};

struct SizeView {
  SizeReport report;
  std::string unit;
  std::optional<double> requested_height;
};

struct BomView {
  BillOfMaterials bom;
  std::string size_unit;     // edge length as requested
  std::string fitting_unit;  // cut lengths
  double edge_length_in_fitting_unit = 0;
};

struct SimulationReport {
  SolidKind kind{};
  std::string hub_name;
  std::string elbow_name;
  double ideal_face_angle = 0;
  int face_sides = 0;
  double edge_length = 0;
  std::string unit;
  AsBuiltSummary asbuilt;
  ClosureResult face_walk;
  FlexSolution flex;
};

MetricsReport make_metrics_report(SolidKind kind);

void render_text(const MetricsReport& r, std::ostream& out);
void render_text(const JointReport& r, std::ostream& out);
void render_text(const SizeView& r, std::ostream& out);
void render_text(const BomView& r, std::ostream& out);
void render_text(const SimulationReport& r, std::ostream& out);

nlohmann::json to_json(const MetricsReport& r);
nlohmann::json to_json(const JointReport& r);
nlohmann::json to_json(const SizeView& r);
nlohmann::json to_json(const BomView& r);
nlohmann::json to_json(const SimulationReport& r);

/// Keys sorted, two-space indent, trailing newline.
template <typename Report>
void render_json(const Report& r, std::ostream& out) {
  out << to_json(r).dump(2) << '\n';
}

}  // namespace pipefit::cli
