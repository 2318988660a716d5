#include "pipefit/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "pipefit/angles.hpp"
#include "pipefit/error.hpp"

namespace pipefit {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InfeasibleVertex: return "infeasible-vertex";
    case ErrorKind::ArityMismatch: return "arity-mismatch";
    case ErrorKind::Degenerate: return "degenerate";
    case ErrorKind::OutOfRange: return "out-of-range";
    case ErrorKind::NonpositiveCut: return "nonpositive-cut";
    case ErrorKind::EmptyCatalog: return "empty-catalog";
    case ErrorKind::CatalogParse: return "catalog-parse";
    case ErrorKind::CatalogValidation: return "catalog-validation";
  }
  return "unknown";
}

std::string_view to_string(SolidKind kind) noexcept {
  switch (kind) {
    case SolidKind::Tetrahedron: return "tetrahedron";
    case SolidKind::Cube: return "cube";
    case SolidKind::Octahedron: return "octahedron";
    case SolidKind::Dodecahedron: return "dodecahedron";
    case SolidKind::Icosahedron: return "icosahedron";
  }
  return "unknown";
}

std::optional<SolidKind> parse_solid(std::string_view name) noexcept {
  for (SolidKind k : kAllSolids)
    if (to_string(k) == name) return k;
  return std::nullopt;
}

SolidCounts solid_counts(SolidKind kind) noexcept {
  switch (kind) {
    case SolidKind::Tetrahedron: return {4, 6, 4, 3, 3};
    case SolidKind::Cube: return {8, 12, 6, 3, 4};
    case SolidKind::Octahedron: return {6, 12, 8, 4, 3};
    case SolidKind::Dodecahedron: return {20, 30, 12, 3, 5};
    case SolidKind::Icosahedron: return {12, 30, 20, 5, 3};
  }
  return {0, 0, 0, 0, 0};
}

int Polyhedron::degree(int v) const {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(), [v](const Edge& e) {
    return e.first == v || e.second == v;
  }));
}

std::vector<int> Polyhedron::neighbors(int v) const {
  std::vector<int> out;
  for (const auto& [a, b] : edges) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  return out;
}

Vec3 Polyhedron::center() const {
  Vec3 c = Vec3::Zero();
  for (const auto& x : vertices) c += x;
  return c / static_cast<double>(vertices.size());
}

Vec3 Polyhedron::face_centroid(int f) const {
  const auto& face = faces.at(f);
  Vec3 c = Vec3::Zero();
  for (int i : face) c += vertices[i];
  return c / static_cast<double>(face.size());
}

Vec3 Polyhedron::face_normal(int f) const {
  // Newell's method; robust for any planar polygon.
  const auto& face = faces.at(f);
  Vec3 n = Vec3::Zero();
  for (std::size_t i = 0; i < face.size(); ++i) {
    const Vec3& a = vertices[face[i]];
    const Vec3& b = vertices[face[(i + 1) % face.size()]];
    n += a.cross(b);
  }
  return n.normalized();
}

namespace {

// Faces are the maximal vertex sets on supporting planes. Each one is found
// from any two consecutive edges i-j-k on it.
std::vector<Face> find_faces(const std::vector<Vec3>& verts, const std::vector<Edge>& edges) {
  const double tol = 1e-7;
  const int n = static_cast<int>(verts.size());
  Vec3 center = Vec3::Zero();
  for (const auto& x : verts) center += x;
  center /= n;

  std::vector<std::vector<int>> adj(n);
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }

  std::map<std::vector<int>, Face> found;
  for (const auto& [ei, ej] : edges) {
    for (int i : {ei, ej}) {
      const int j = i == ei ? ej : ei;
      for (int k : adj[j]) {
        if (k == i) continue;
        Vec3 normal = (verts[j] - verts[i]).cross(verts[k] - verts[j]);
        if (normal.norm() < tol) continue;
        normal.normalize();
        if (normal.dot(verts[i] - center) < 0) normal = -normal;
        const double offset = normal.dot(verts[i]);

        bool supporting = true;
        std::vector<int> on_plane;
        for (int v = 0; v < n; ++v) {
          const double d = normal.dot(verts[v]) - offset;
          if (d > tol) {
            supporting = false;
            break;
          }
          if (d > -tol) on_plane.push_back(v);
        }
        if (!supporting || found.count(on_plane)) continue;

        Vec3 c = Vec3::Zero();
        for (int v : on_plane) c += verts[v];
        c /= static_cast<double>(on_plane.size());
        const Vec3 u = (verts[on_plane.front()] - c).normalized();
        const Vec3 w = normal.cross(u);
        Face face = on_plane;
        std::sort(face.begin(), face.end(), [&](int a, int b) {
          const Vec3 da = verts[a] - c, db = verts[b] - c;
          return std::atan2(da.dot(w), da.dot(u)) < std::atan2(db.dot(w), db.dot(u));
        });
        std::rotate(face.begin(), std::min_element(face.begin(), face.end()), face.end());
        found.emplace(on_plane, std::move(face));
      }
    }
  }

  std::vector<Face> faces;
  faces.reserve(found.size());
  for (auto& [key, face] : found) faces.push_back(std::move(face));
  return faces;
}

Polyhedron build(SolidKind kind, std::vector<Vec3> verts, double scale) {
  for (auto& x : verts) x *= scale;
  std::vector<Edge> edges;
  for (int i = 0; i < static_cast<int>(verts.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(verts.size()); ++j)
      if (std::abs((verts[i] - verts[j]).norm() - 1.0) < 1e-9) edges.emplace_back(i, j);
  auto faces = find_faces(verts, edges);
  return Polyhedron{kind, std::move(verts), std::move(edges), std::move(faces)};
}

Polyhedron make_solid(SolidKind kind) {
  const double phi = std::numbers::phi;
  const double iphi = 1.0 / phi;
  std::vector<Vec3> v;
  switch (kind) {
    case SolidKind::Tetrahedron:
      v = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
      return build(kind, v, 1.0 / (2.0 * std::sqrt(2.0)));
    case SolidKind::Cube:
      for (double x : {-1.0, 1.0})
        for (double y : {-1.0, 1.0})
          for (double z : {-1.0, 1.0}) v.emplace_back(x, y, z);
      return build(kind, v, 0.5);
    case SolidKind::Octahedron:
      v = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
      return build(kind, v, 1.0 / std::sqrt(2.0));
    case SolidKind::Dodecahedron:
      for (double x : {-1.0, 1.0})
        for (double y : {-1.0, 1.0})
          for (double z : {-1.0, 1.0}) v.emplace_back(x, y, z);
      for (double a : {-1.0, 1.0})
        for (double b : {-1.0, 1.0}) {
          v.emplace_back(0, a * iphi, b * phi);
          v.emplace_back(a * iphi, b * phi, 0);
          v.emplace_back(a * phi, 0, b * iphi);
        }
      return build(kind, v, phi / 2.0);
    case SolidKind::Icosahedron:
      for (double a : {-1.0, 1.0})
        for (double b : {-1.0, 1.0}) {
          v.emplace_back(0, a, b * phi);
          v.emplace_back(a, b * phi, 0);
          v.emplace_back(a * phi, 0, b);
        }
      return build(kind, v, 0.5);
  }
  throw std::logic_error("unknown solid kind");
}

double angle_between(const Vec3& a, const Vec3& b) {
  // atan2 form keeps full precision near 0 and pi.
  return std::atan2(a.cross(b).norm(), a.dot(b));
}

}  // namespace

const Polyhedron& platonic_solid(SolidKind kind) {
  static const std::array<Polyhedron, 5> solids = {
      make_solid(SolidKind::Tetrahedron), make_solid(SolidKind::Cube),
      make_solid(SolidKind::Octahedron), make_solid(SolidKind::Dodecahedron),
      make_solid(SolidKind::Icosahedron)};
  return solids[static_cast<std::size_t>(kind)];
}

Polyhedron scaled(const Polyhedron& p, double s) {
  Polyhedron out = p;
  for (auto& x : out.vertices) x *= s;
  return out;
}

Eigen::Isometry3d resting_orientation(const Polyhedron& p, int face) {
  const Vec3 n = p.face_normal(face);
  const Eigen::Quaterniond q = Eigen::Quaterniond::FromTwoVectors(n, -Vec3::UnitZ());
  Eigen::Isometry3d t = Eigen::Isometry3d::Identity();
  t.linear() = q.toRotationMatrix();
  t.translation() = -(t.linear() * p.face_centroid(face));
  return t;
}

std::vector<double> resting_heights(const Polyhedron& p, int face) {
  const auto t = resting_orientation(p, face);
  std::vector<double> h;
  h.reserve(p.vertices.size());
  for (const auto& x : p.vertices) h.push_back((t * x).z());
  return h;
}

PolyhedronMetrics polyhedron_metrics(const Polyhedron& p) {
  PolyhedronMetrics m;
  const Vec3 c = p.center();
  const int base = 0;
  const Vec3 n0 = p.face_normal(base);
  const Vec3 fc = p.face_centroid(base);

  m.inradius = n0.dot(fc - c);
  for (const auto& x : p.vertices) m.circumradius = std::max(m.circumradius, (x - c).norm());

  const auto& f0 = p.faces[base];
  m.face_circumradius = (p.vertices[f0[0]] - fc).norm();
  m.face_inradius = (0.5 * (p.vertices[f0[0]] + p.vertices[f0[1]]) - fc).norm();

  // Faces sharing an edge with the base.
  std::vector<int> adjacent;
  for (int f = 1; f < p.face_count(); ++f) {
    int shared = 0;
    for (int v : p.faces[f])
      if (std::find(f0.begin(), f0.end(), v) != f0.end()) ++shared;
    if (shared == 2) adjacent.push_back(f);
  }
  m.dihedral_angle = kPi - angle_between(n0, p.face_normal(adjacent.at(0)));

  const auto heights = resting_heights(p, base);
  m.resting_height = *std::max_element(heights.begin(), heights.end());
  for (int f : adjacent)
    for (int v : p.faces[f]) m.second_row_height = std::max(m.second_row_height, heights[v]);
  return m;
}

VertexFigure vertex_figure(const Polyhedron& p, int v) {
  if (v < 0 || v >= p.vertex_count()) throw std::out_of_range("vertex index out of range");
  VertexFigure vf;
  const auto nbrs = p.neighbors(v);
  vf.q = static_cast<int>(nbrs.size());

  Vec3 axis = Vec3::Zero();
  std::vector<Vec3> dirs;
  for (int w : nbrs) {
    dirs.push_back((p.vertices[w] - p.vertices[v]).normalized());
    axis += dirs.back();
  }
  axis.normalize();
  vf.beta = angle_between(dirs.front(), axis);

  for (const auto& face : p.faces) {
    auto it = std::find(face.begin(), face.end(), v);
    if (it == face.end()) continue;
    const std::size_t i = static_cast<std::size_t>(it - face.begin());
    const int prev = face[(i + face.size() - 1) % face.size()];
    const int next = face[(i + 1) % face.size()];
    vf.gamma = angle_between(p.vertices[prev] - p.vertices[v], p.vertices[next] - p.vertices[v]);
    break;
  }
  return vf;
}

double edge_axis_angle(int q, double gamma) {
  if (q < 3 || !(gamma > 0.0) || !(gamma < kPi))
    throw Error(ErrorKind::InfeasibleVertex,
                "vertex figure needs q >= 3 and 0 < gamma < 180 degrees (q=" + std::to_string(q) + ")");
  const double ratio = std::sin(gamma / 2.0) / std::sin(kPi / q);
  if (ratio > 1.0 + 1e-12)
    throw Error(ErrorKind::InfeasibleVertex,
                "infeasible vertex: " + std::to_string(q) + " faces of angle " +
                    std::to_string(rad_to_deg(gamma)) + " degrees cannot meet symmetrically");
  return std::asin(std::min(ratio, 1.0));
}

VertexFigure ideal_vertex_figure(SolidKind kind) {
  const auto c = solid_counts(kind);
  VertexFigure vf;
  vf.q = c.vertex_degree;
  vf.gamma = kPi * (c.face_sides - 2) / c.face_sides;
  vf.beta = edge_axis_angle(vf.q, vf.gamma);
  return vf;
}

}  // namespace pipefit
