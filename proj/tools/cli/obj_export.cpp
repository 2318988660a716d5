#include "cli/obj_export.hpp"

#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ostream.h>

namespace pipefit::cli {

namespace {

void write_vertex(const Vec3& x, std::ostream& sink) {
  // Adding 0.0 folds -0 into +0 so output does not depend on sign of zero.
  fmt::print(sink, "v {:.15g} {:.15g} {:.15g}\n", x.x() + 0.0, x.y() + 0.0, x.z() + 0.0);
}

void check(const std::ostream& sink) {
  if (!sink) throw std::runtime_error("failed to write OBJ output");
}

}  // namespace

void export_obj(const Polyhedron& p, std::ostream& sink) {
  for (const auto& x : p.vertices) write_vertex(x, sink);
  for (const auto& [a, b] : p.edges) fmt::print(sink, "l {} {}\n", a + 1, b + 1);
  sink.flush();
  check(sink);
}

void export_obj(std::span<const Vec3> polyline, std::ostream& sink) {
  for (const auto& x : polyline) write_vertex(x, sink);
  for (std::size_t i = 1; i < polyline.size(); ++i) fmt::print(sink, "l {} {}\n", i, i + 1);
  sink.flush();
  check(sink);
}

}  // namespace pipefit::cli
