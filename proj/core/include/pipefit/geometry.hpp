#pragma once

// Canonical Platonic solids, their unit-edge metrics and the trigonometry of
// a symmetric vertex.

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace pipefit {

using Vec3 = Eigen::Vector3d;

enum class SolidKind { Tetrahedron, Cube, Octahedron, Dodecahedron, Icosahedron };

inline constexpr std::array<SolidKind, 5> kAllSolids = {
    SolidKind::Tetrahedron, SolidKind::Cube, SolidKind::Octahedron,
    SolidKind::Dodecahedron, SolidKind::Icosahedron};

std::string_view to_string(SolidKind kind) noexcept;
std::optional<SolidKind> parse_solid(std::string_view name) noexcept;

using Edge = std::pair<int, int>;
using Face = std::vector<int>;

struct Polyhedron {
  SolidKind kind;
  std::vector<Vec3> vertices;
  std::vector<Edge> edges;  // i < j, lexicographic
  std::vector<Face> faces;  // counter-clockwise seen from outside

  int vertex_count() const noexcept { return static_cast<int>(vertices.size()); }
  int edge_count() const noexcept { return static_cast<int>(edges.size()); }
  int face_count() const noexcept { return static_cast<int>(faces.size()); }

  /// Degree of vertex v.
  int degree(int v) const;
  std::vector<int> neighbors(int v) const;

  Vec3 center() const;
  Vec3 face_centroid(int f) const;
  /// Unit outward normal of face f.
  Vec3 face_normal(int f) const;
};

/// Per unit edge; dihedral_angle in radians (interior, in (0, pi)).
struct PolyhedronMetrics {
  double inradius = 0;
  double circumradius = 0;
  double face_inradius = 0;
  double face_circumradius = 0;
  double dihedral_angle = 0;
  /// Top of a face adjacent to the resting face, i.e. the highest opening
  /// on the side of the solid when it rests on a face.
  double second_row_height = 0;
  /// Height of the solid resting on a face.
  double resting_height = 0;
};

struct VertexFigure {
  int q = 0;          // edges meeting at the vertex
  double gamma = 0;   // face interior angle at the vertex
  double beta = 0;    // angle between each edge and the inward symmetry axis
};

/// Unit-edge canonical coordinates. Deterministic.
const Polyhedron& platonic_solid(SolidKind kind);

/// Combinatorial data that does not need coordinates.
struct SolidCounts {
  int vertices, edges, faces, vertex_degree, face_sides;
};
SolidCounts solid_counts(SolidKind kind) noexcept;

/// Returns a copy with every coordinate multiplied by s.
Polyhedron scaled(const Polyhedron& p, double s);

PolyhedronMetrics polyhedron_metrics(const Polyhedron& p);

/// Coordinate-level extraction at vertex v.
VertexFigure vertex_figure(const Polyhedron& p, int v);

/// Closed form beta = asin(sin(gamma/2) / sin(pi/q)).
/// Throws Error(InfeasibleVertex) when sin(gamma/2) > sin(pi/q).
double edge_axis_angle(int q, double gamma);

/// Vertex figure from the closed form alone.
VertexFigure ideal_vertex_figure(SolidKind kind);

/// Rigid transform putting face f on the z = 0 plane with its centroid at
/// the origin and the rest of the solid at z >= 0.
Eigen::Isometry3d resting_orientation(const Polyhedron& p, int face);

/// Vertex heights after resting_orientation(p, face).
std::vector<double> resting_heights(const Polyhedron& p, int face);

}  // namespace pipefit
