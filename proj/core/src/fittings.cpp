#include "pipefit/fittings.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "pipefit/angles.hpp"
#include "pipefit/error.hpp"

namespace pipefit {

using nlohmann::json;

const HubFitting* Catalog::find_hub(std::string_view name) const noexcept {
  for (const auto& h : hubs)
    if (h.name == name) return &h;
  return nullptr;
}

const ElbowFitting* Catalog::find_elbow(std::string_view name) const noexcept {
  for (const auto& e : elbows)
    if (e.name == name) return &e;
  return nullptr;
}

const HubFitting& Catalog::hub(std::string_view name) const {
  if (const auto* h = find_hub(name)) return *h;
  throw std::out_of_range("no hub named '" + std::string(name) + "'");
}

const ElbowFitting& Catalog::elbow(std::string_view name) const {
  if (const auto* e = find_elbow(name)) return *e;
  throw std::out_of_range("no elbow named '" + std::string(name) + "'");
}

Catalog standard_catalog() {
  const double planar = kPi / 2.0;
  Catalog c;
  c.hubs = {
      {"true-wye", 3, planar, 2.5, 0.0},
      {"four-way-plus", 4, planar, 2.5, 0.0},
      {"five-way-planar", 5, planar, 2.5, 0.0},
      {"cube-corner", 3, std::acos(1.0 / std::sqrt(3.0)), 2.5, 0.0},
  };
  c.elbows = {
      {"elbow-11.25", deg_to_rad(11.25), 0.0, 0.0},
      {"elbow-22.5", deg_to_rad(22.5), 0.0, 0.0},
      {"elbow-45", deg_to_rad(45.0), 0.0, 0.0},
      {"elbow-90", deg_to_rad(90.0), 0.0, 0.0},
  };
  return c;
}

namespace {

[[noreturn]] void invalid(const std::string& entry, const std::string& why) {
  throw Error(ErrorKind::CatalogValidation, "catalog entry '" + entry + "': " + why);
}

[[noreturn]] void malformed(const std::string& why) {
  throw Error(ErrorKind::CatalogParse, "malformed catalog: " + why);
}

void check_keys(const json& obj, std::initializer_list<std::string_view> allowed,
                const std::string& where) {
  if (!obj.is_object()) malformed(where + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) malformed("unknown key '" + key + "' in " + where);
  }
}

double number(const json& obj, const char* key, const std::string& where, double fallback,
              bool required) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    if (required) malformed(where + " is missing '" + key + "'");
    return fallback;
  }
  if (!it->is_number()) malformed("'" + std::string(key) + "' in " + where + " must be a number");
  const double v = it->get<double>();
  if (!std::isfinite(v)) malformed("'" + std::string(key) + "' in " + where + " must be finite");
  return v;
}

std::string name_of(const json& obj, const std::string& where) {
  auto it = obj.find("name");
  if (it == obj.end() || !it->is_string()) malformed(where + " needs a string 'name'");
  return it->get<std::string>();
}

}  // namespace

void validate_catalog(const Catalog& catalog) {
  std::set<std::string> seen;
  for (const auto& h : catalog.hubs) {
    if (!seen.insert(h.name).second) invalid(h.name, "duplicate hub name");
    if (h.arm_count < 3) invalid(h.name, "arm_count must be at least 3");
    if (!(h.arm_axis_angle > 0.0 && h.arm_axis_angle <= kPi / 2.0 + 1e-12))
      invalid(h.name, "arm_axis_angle must be in (0, 90] degrees");
    if (!(h.arm_length > 0.0)) invalid(h.name, "arm_length must be positive");
    if (!(h.socket_depth >= 0.0)) invalid(h.name, "socket_depth must be non-negative");
  }
  seen.clear();
  for (const auto& e : catalog.elbows) {
    if (!seen.insert(e.name).second) invalid(e.name, "duplicate elbow name");
    if (!(e.bend_angle >= 0.0 && e.bend_angle < kPi))
      invalid(e.name, "bend_angle must be in [0, 180) degrees");
    if (!(e.takeoff >= 0.0)) invalid(e.name, "takeoff must be non-negative");
    if (!(e.socket_depth >= 0.0)) invalid(e.name, "socket_depth must be non-negative");
  }
  if (catalog.elbows.empty()) invalid("elbows", "catalog has no elbows");
}

Catalog load_catalog(std::istream& source) {
  json doc;
  try {
    doc = json::parse(source);
  } catch (const json::parse_error& e) {
    malformed(e.what());
  }
  check_keys(doc, {"hubs", "elbows"}, "document");
  if (!doc.contains("hubs") || !doc["hubs"].is_array()) malformed("'hubs' must be an array");
  if (!doc.contains("elbows") || !doc["elbows"].is_array()) malformed("'elbows' must be an array");

  Catalog c;
  for (const auto& h : doc["hubs"]) {
    check_keys(h, {"name", "arm_count", "arm_axis_angle_deg", "arm_length", "socket_depth"}, "hub");
    HubFitting hub;
    hub.name = name_of(h, "hub");
    const std::string where = "hub '" + hub.name + "'";
    const double arms = number(h, "arm_count", where, 0, true);
    if (arms != std::floor(arms)) malformed("'arm_count' in " + where + " must be an integer");
    hub.arm_count = static_cast<int>(arms);
    hub.arm_axis_angle = deg_to_rad(number(h, "arm_axis_angle_deg", where, 0, true));
    hub.arm_length = number(h, "arm_length", where, 2.5, false);
    hub.socket_depth = number(h, "socket_depth", where, 0.0, false);
    c.hubs.push_back(std::move(hub));
  }
  for (const auto& e : doc["elbows"]) {
    check_keys(e, {"name", "bend_angle_deg", "takeoff", "socket_depth"}, "elbow");
    ElbowFitting elbow;
    elbow.name = name_of(e, "elbow");
    const std::string where = "elbow '" + elbow.name + "'";
    elbow.bend_angle = deg_to_rad(number(e, "bend_angle_deg", where, 0, true));
    elbow.takeoff = number(e, "takeoff", where, 0.0, false);
    elbow.socket_depth = number(e, "socket_depth", where, 0.0, false);
    c.elbows.push_back(std::move(elbow));
  }
  validate_catalog(c);
  return c;
}

Catalog load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::CatalogParse, "cannot open catalog file '" + path + "'");
  return load_catalog(in);
}

std::string serialize_catalog(const Catalog& catalog) {
  json doc;
  doc["hubs"] = json::array();
  doc["elbows"] = json::array();
  for (const auto& h : catalog.hubs)
    doc["hubs"].push_back({{"name", h.name},
                           {"arm_count", h.arm_count},
                           {"arm_axis_angle_deg", rad_to_deg(h.arm_axis_angle)},
                           {"arm_length", h.arm_length},
                           {"socket_depth", h.socket_depth}});
  for (const auto& e : catalog.elbows)
    doc["elbows"].push_back({{"name", e.name},
                             {"bend_angle_deg", rad_to_deg(e.bend_angle)},
                             {"takeoff", e.takeoff},
                             {"socket_depth", e.socket_depth}});
  return doc.dump(2) + "\n";
}

}  // namespace pipefit
