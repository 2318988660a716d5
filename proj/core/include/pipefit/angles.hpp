#pragma once

#include <numbers>

namespace pipefit {

constexpr double kPi = std::numbers::pi;

constexpr double deg_to_rad(double deg) noexcept { return deg * kPi / 180.0; }
constexpr double rad_to_deg(double rad) noexcept { return rad * 180.0 / kPi; }

/// Tolerance for unit-edge geometry.
constexpr double kGeomTol = 1e-9;

}  // namespace pipefit
