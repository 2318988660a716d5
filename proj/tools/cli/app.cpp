#include "cli/app.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "cli/obj_export.hpp"
#include "cli/quantity.hpp"
#include "cli/render.hpp"
#include "pipefit/angles.hpp"
#include "pipefit/error.hpp"

namespace pipefit::cli {

namespace {

/// Bad input that CLI11 cannot see: unknown catalog names, unit mismatches.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Request {
  std::string subcommand;
  std::string solid;
  std::string hub;
  std::string elbow;
  std::string height;
  std::string edge;
  std::string arm_length;
  std::string fitting_unit = "in";
  std::string catalog_path;
  std::string format = "text";
  std::string output_path;
  std::optional<double> bend_deg;
  double lambda = 1e-3;
  int walk_sides = 0;
  std::optional<double> walk_angle_deg;
};

SolidKind solid_of(const Request& req) {
  if (auto k = parse_solid(req.solid)) return *k;
  throw UsageError("unknown solid '" + req.solid + "'");
}

Catalog resolve_catalog(const Request& req) {
  if (!req.catalog_path.empty()) return load_catalog_file(req.catalog_path);
  if (const char* env = std::getenv("PIPEFIT_CATALOG"); env && *env) return load_catalog_file(env);
  return standard_catalog();
}

Quantity quantity_of(const std::string& text, const char* flag) {
  if (auto q = parse_quantity(text)) return *q;
  throw UsageError(fmt::format("{} expects a positive length such as 6ft or 2.5in, got '{}'", flag, text));
}

/// Among hubs with the right arm count, the one whose best elbow is closest
/// to the required bend; catalog order breaks ties.
const HubFitting& pick_hub(const Request& req, const Catalog& catalog, const VertexFigure& vf) {
  if (!req.hub.empty()) {
    if (const auto* h = catalog.find_hub(req.hub)) return *h;
    throw UsageError("catalog has no hub named '" + req.hub + "'");
  }
  const HubFitting* best = nullptr;
  double best_error = 0;
  for (const auto& h : catalog.hubs) {
    if (h.arm_count != vf.q) continue;
    try {
      const auto choice = choose_elbow(vf, h, catalog);
      const double e = std::abs(choice.error);
      if (!best || e < best_error - 1e-12) {
        best = &h;
        best_error = e;
      }
    } catch (const Error&) {
      continue;
    }
  }
  if (!best)
    throw Error(ErrorKind::ArityMismatch,
                fmt::format("no hub in the catalog has {} arms", vf.q));
  return *best;
}

ElbowChoice pick_elbow(const Request& req, const Catalog& catalog, const VertexFigure& vf,
                       const HubFitting& hub) {
  if (req.elbow.empty()) return choose_elbow(vf, hub, catalog);
  const auto* e = catalog.find_elbow(req.elbow);
  if (!e) throw UsageError("catalog has no elbow named '" + req.elbow + "'");
  const auto joint = solve_joint(vf, hub);
  ElbowChoice choice;
  choice.elbow = *e;
  choice.error = choice.signed_bend(joint.delta) - joint.delta;
  choice.face_angle_realized = realized_vertex(vf, hub, choice.signed_bend(joint.delta));
  choice.face_angle_error = *choice.face_angle_realized - vf.gamma;
  return choice;
}

template <typename Report>
void emit(const Report& r, const Request& req, std::ostream& out) {
  if (req.format == "json")
    render_json(r, out);
  else
    render_text(r, out);
}

void cmd_metrics(const Request& req, std::ostream& out) {
  emit(make_metrics_report(solid_of(req)), req, out);
}

void cmd_joint(const Request& req, std::ostream& out) {
  const auto kind = solid_of(req);
  const auto catalog = resolve_catalog(req);
  const auto vf = ideal_vertex_figure(kind);
  HubFitting hub = pick_hub(req, catalog, vf);
  std::string unit = req.fitting_unit;
  if (!req.arm_length.empty()) {
    const auto q = quantity_of(req.arm_length, "--arm-length");
    hub.arm_length = q.value;
    if (!q.unit.empty()) unit = q.unit;
  }
  JointReport r{kind, hub, vf, solve_joint(vf, hub), pick_elbow(req, catalog, vf, hub), unit};
  emit(r, req, out);
}

// Edge length and its unit from --height / --edge.
std::pair<double, std::string> edge_of(const Request& req, SolidKind kind,
                                       std::optional<double>* requested_height = nullptr) {
  if (req.height.empty() == req.edge.empty())
    throw UsageError("give exactly one of --height or --edge");
  if (!req.height.empty()) {
    const auto h = quantity_of(req.height, "--height");
    if (requested_height) *requested_height = h.value;
    return {edge_length_for_height(kind, h.value), h.unit};
  }
  const auto e = quantity_of(req.edge, "--edge");
  return {e.value, e.unit};
}

void cmd_size(const Request& req, std::ostream& out) {
  const auto kind = solid_of(req);
  SizeView v;
  const auto [edge, unit] = edge_of(req, kind, &v.requested_height);
  v.report = size_report(kind, edge);
  v.unit = unit;
  emit(v, req, out);
}

void cmd_bom(const Request& req, std::ostream& out) {
  const auto kind = solid_of(req);
  const auto catalog = resolve_catalog(req);
  const auto vf = ideal_vertex_figure(kind);
  const auto [edge, unit] = edge_of(req, kind);
  const auto& hub = pick_hub(req, catalog, vf);
  const auto choice = pick_elbow(req, catalog, vf, hub);

  // Fittings are dimensioned in --unit; the edge is whatever the user typed.
  const auto edge_in_fitting = convert_length(edge, unit, req.fitting_unit);
  if (!edge_in_fitting)
    throw UsageError(fmt::format("cannot relate edge unit '{}' to fitting unit '{}'", unit, req.fitting_unit));

  BomView v;
  v.bom = bill_of_materials(kind, hub, choice, *edge_in_fitting);
  v.bom.edge_length = edge;
  v.size_unit = unit.empty() ? req.fitting_unit : unit;
  v.fitting_unit = req.fitting_unit;
  v.edge_length_in_fitting_unit = *edge_in_fitting;
  emit(v, req, out);
}

void cmd_simulate(const Request& req, std::ostream& out) {
  const auto kind = solid_of(req);
  const auto catalog = resolve_catalog(req);
  const auto vf = ideal_vertex_figure(kind);
  const auto& hub = pick_hub(req, catalog, vf);
  const auto joint = solve_joint(vf, hub);

  SimulationReport r;
  r.kind = kind;
  r.hub_name = hub.name;
  r.ideal_face_angle = vf.gamma;
  r.face_sides = solid_counts(kind).face_sides;
  double bend = 0;
  if (req.bend_deg) {
    bend = deg_to_rad(*req.bend_deg);
    r.elbow_name = "override";
  } else {
    const auto choice = pick_elbow(req, catalog, vf, hub);
    bend = choice.signed_bend(joint.delta);
    r.elbow_name = choice.elbow.name;
  }
  if (req.edge.empty()) {
    r.edge_length = 1.0;
  } else {
    const auto q = quantity_of(req.edge, "--edge");
    r.edge_length = q.value;
    r.unit = q.unit;
  }
  r.asbuilt = assemble_asbuilt(kind, hub, bend, r.edge_length);
  r.face_walk = face_loop_walk(r.face_sides, r.edge_length, r.asbuilt.realized_face_angle);
  r.flex = compensate(r.face_sides, r.edge_length, r.asbuilt.realized_face_angle, req.lambda);
  emit(r, req, out);
}

void cmd_export_obj(const Request& req, std::ostream& out) {
  if (req.solid.empty() == (req.walk_sides == 0))
    throw UsageError("give exactly one of --solid or --walk");
  double edge = 1.0;
  if (!req.edge.empty()) edge = quantity_of(req.edge, "--edge").value;
  if (!req.solid.empty()) {
    export_obj(scaled(platonic_solid(solid_of(req)), edge), out);
    return;
  }
  if (!req.walk_angle_deg) throw UsageError("--walk needs --angle");
  const double angle = deg_to_rad(*req.walk_angle_deg);
  if (!(angle > 0.0 && angle < kPi)) throw UsageError("--angle must be in (0, 180)");
  const auto pts = face_loop_points(req.walk_sides, edge, angle);
  export_obj(pts, out);
}

std::vector<std::string> solid_names() {
  std::vector<std::string> names;
  for (auto k : kAllSolids) names.emplace_back(to_string(k));
  return names;
}

void add_output_options(CLI::App* sub, Request& req) {
  sub->add_option("--format", req.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  sub->add_option("-o,--output", req.output_path, "Write the result to a file instead of stdout");
}

void add_catalog_option(CLI::App* sub, Request& req) {
  sub->add_option("--catalog", req.catalog_path,
                  "Fitting catalog JSON (default: $PIPEFIT_CATALOG, else the built-in catalog)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Calculator for Platonic solids built from pipe hubs, elbows and straight pipe"};
  app.name("pipefit");
  app.require_subcommand(1);
  Request req;
  const auto solids = solid_names();

  auto* metrics = app.add_subcommand("metrics", "Unit-edge metrics and vertex figure of a solid");
  metrics->add_option("--solid", req.solid)->required()->check(CLI::IsMember(solids));
  add_output_options(metrics, req);

  auto* joint = app.add_subcommand("joint", "Elbow bend, vertex offset and edge extension for a hub");
  joint->add_option("--solid", req.solid)->required()->check(CLI::IsMember(solids));
  joint->add_option("--hub", req.hub, "Hub name (default: best match in the catalog)");
  joint->add_option("--elbow", req.elbow, "Force a catalog elbow instead of the closest one");
  joint->add_option("--arm-length", req.arm_length, "Override the hub arm length, e.g. 3in");
  joint->add_option("--unit", req.fitting_unit, "Length unit of the catalog dimensions")
      ->capture_default_str();
  add_catalog_option(joint, req);
  add_output_options(joint, req);

  auto* size = app.add_subcommand("size", "Scale a solid to a height or edge length");
  size->add_option("--solid", req.solid)->required()->check(CLI::IsMember(solids));
  auto* size_h = size->add_option("--height", req.height, "Standing height, e.g. 6ft");
  auto* size_e = size->add_option("--edge", req.edge, "Edge length, e.g. 2.5ft");
  size_h->excludes(size_e);
  add_output_options(size, req);

  auto* bom = app.add_subcommand("bom", "Bill of materials and cut list");
  bom->add_option("--solid", req.solid)->required()->check(CLI::IsMember(solids));
  auto* bom_h = bom->add_option("--height", req.height, "Standing height, e.g. 6ft");
  auto* bom_e = bom->add_option("--edge", req.edge, "Edge length, e.g. 2.5ft");
  bom_h->excludes(bom_e);
  bom->add_option("--hub", req.hub, "Hub name (default: best match in the catalog)");
  bom->add_option("--elbow", req.elbow, "Force a catalog elbow instead of the closest one");
  bom->add_option("--unit", req.fitting_unit, "Length unit of the catalog dimensions and cut lengths")
      ->capture_default_str();
  add_catalog_option(bom, req);
  add_output_options(bom, req);

  auto* sim = app.add_subcommand("simulate", "As-built face closure and flex compensation");
  sim->add_option("--solid", req.solid)->required()->check(CLI::IsMember(solids));
  sim->add_option("--hub", req.hub, "Hub name (default: best match in the catalog)");
  sim->add_option("--elbow", req.elbow, "Force a catalog elbow instead of the closest one");
  sim->add_option("--bend", req.bend_deg, "Bend override in degrees (signed)");
  sim->add_option("--edge", req.edge, "Edge length (default 1)");
  sim->add_option("--lambda", req.lambda, "Compensation damping weight")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  add_catalog_option(sim, req);
  add_output_options(sim, req);

  auto* obj = app.add_subcommand("export-obj", "OBJ wireframe of a solid or of a face walk");
  obj->add_option("--solid", req.solid)->check(CLI::IsMember(solids));
  obj->add_option("--walk", req.walk_sides, "Walk an n-gon face loop instead")->check(CLI::Range(3, 1000));
  obj->add_option("--angle", req.walk_angle_deg, "Interior angle for --walk, degrees");
  obj->add_option("--edge", req.edge, "Edge length (default 1)");
  obj->add_option("-o,--output", req.output_path, "Write to a file instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsageError;
  }

  std::ostringstream buffer;
  try {
    if (metrics->parsed()) cmd_metrics(req, buffer);
    else if (joint->parsed()) cmd_joint(req, buffer);
    else if (size->parsed()) cmd_size(req, buffer);
    else if (bom->parsed()) cmd_bom(req, buffer);
    else if (sim->parsed()) cmd_simulate(req, buffer);
    else if (obj->parsed()) cmd_export_obj(req, buffer);
  } catch (const UsageError& e) {
    err << "pipefit: " << e.what() << '\n';
    return kExitUsageError;
  } catch (const Error& e) {
    err << "pipefit: " << e.what() << '\n';
    return e.is_input_error() ? kExitUsageError : kExitDomainError;
  } catch (const std::exception& e) {
    err << "pipefit: " << e.what() << '\n';
    return kExitDomainError;
  }

  if (req.output_path.empty()) {
    out << buffer.str();
    out.flush();
    return out ? kExitOk : kExitDomainError;
  }
  std::ofstream file(req.output_path, std::ios::binary);
  file << buffer.str();
  file.close();
  if (!file) {
    err << "pipefit: cannot write '" << req.output_path << "'\n";
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace pipefit::cli
