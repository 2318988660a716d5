#pragma once

// Hub and elbow fittings, the built-in catalog, and the JSON catalog format.

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace pipefit {

/// Multi-arm connector. Lengths are in whatever unit the caller uses; no
/// conversion happens anywhere in the library.
struct HubFitting {
  std::string name;
  int arm_count = 3;
  double arm_axis_angle = 0;  // radians, arm to hub symmetry axis; pi/2 for planar hubs
  double arm_length = 2.5;    // hub center to elbow center
  double socket_depth = 0;

  bool operator==(const HubFitting&) const = default;
};

struct ElbowFitting {
  std::string name;
  double bend_angle = 0;  // radians, deviation from straight-through
  double takeoff = 0;     // elbow center to socket mouth
  double socket_depth = 0;

  bool operator==(const ElbowFitting&) const = default;
};

struct Catalog {
  std::vector<HubFitting> hubs;
  std::vector<ElbowFitting> elbows;

  /// Throws std::out_of_range for an unknown name.
  const HubFitting& hub(std::string_view name) const;
  const ElbowFitting& elbow(std::string_view name) const;
  const HubFitting* find_hub(std::string_view name) const noexcept;
  const ElbowFitting* find_elbow(std::string_view name) const noexcept;

  bool operator==(const Catalog&) const = default;
};

/// true-wye, four-way-plus, five-way-planar, cube-corner hubs (arm 2.5) and
/// 11.25/22.5/45/90 degree elbows.
Catalog standard_catalog();

/// Checks every invariant; throws Error(CatalogValidation) naming the entry.
void validate_catalog(const Catalog& catalog);

/// Parses the JSON catalog document (degrees on disk, radians in memory).
Catalog load_catalog(std::istream& source);
Catalog load_catalog_file(const std::string& path);

/// Inverse of load_catalog.
std::string serialize_catalog(const Catalog& catalog);

}  // namespace pipefit
