#pragma once

// Wavefront OBJ wireframes: `v x y z` records (15 significant digits) and
// `l i j` records with 1-based indices.

#include <ostream>
#include <span>

#include "pipefit/geometry.hpp"

namespace pipefit::cli {

/// Vertices in index order, then one `l` per edge in edge order.
void export_obj(const Polyhedron& p, std::ostream& sink);

/// Open polyline: one `l` per consecutive pair of points.
void export_obj(std::span<const Vec3> polyline, std::ostream& sink);

}  // namespace pipefit::cli
