#pragma once

#include "manta/geometry.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace manta {

using VertexId = int;

inline constexpr double kDefaultTieTol = 1e-9;

// Unordered vertex pair, stored with a < b.
struct Edge {
  VertexId a = 0;
  VertexId b = 0;

  Edge() = default;
  Edge(VertexId u, VertexId v) : a(u < v ? u : v), b(u < v ? v : u) {}

  friend constexpr bool operator==(const Edge&, const Edge&) = default;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

struct Triangle {
  std::array<VertexId, 3> v{};

  // Vertex ids in ascending order; identity of a triangle across triangulations.
  std::array<VertexId, 3> key() const;

  friend constexpr bool operator==(const Triangle&, const Triangle&) = default;
};

// Distinct finite points, at least three. Shared immutably between the
// triangulations derived from it.
class PointSet {
 public:
  explicit PointSet(std::vector<Point> points);

  std::size_t size() const { return points_->size(); }
  const Point& operator[](VertexId id) const { return (*points_)[static_cast<std::size_t>(id)]; }
  std::span<const Point> points() const { return *points_; }

  bool same_as(const PointSet& other) const;

 private:
  std::shared_ptr<const std::vector<Point>> points_;
};

// Indices of the convex hull vertices in counterclockwise order, starting
// from the lexicographically smallest point. Collinear boundary points are
// dropped; use hull_boundary_count for the count including them.
std::vector<VertexId> convex_hull(std::span<const Point> points);

// Number of input points lying on the hull boundary (corners and collinear).
std::size_t hull_boundary_count(std::span<const Point> points);

double polygon_area(std::span<const Point> points, std::span<const VertexId> ring);

// Immutable, validated triangulation of a point set. Triangles are stored
// counterclockwise; edges and adjacency are derived on construction.
class Triangulation {
 public:
  // Throws InvalidTriangulation on any violated invariant.
  static Triangulation build(PointSet points, std::vector<Triangle> triangles);

  const PointSet& point_set() const { return points_; }
  std::span<const Triangle> triangles() const { return triangles_; }
  std::span<const Edge> edges() const { return edges_; }
  std::size_t vertex_count() const { return points_.size(); }
  std::size_t hull_size() const { return hull_size_; }

  const Point& point(VertexId id) const { return points_[id]; }
  bool has_edge(VertexId u, VertexId v) const;
  std::span<const VertexId> neighbors(VertexId v) const { return neighbors_[static_cast<std::size_t>(v)]; }

  // Triangles incident to edge (u, v): one for hull edges, two otherwise.
  std::span<const int> triangles_on(Edge e) const;
  std::span<const int> triangles_at(VertexId v) const { return vertex_triangles_[static_cast<std::size_t>(v)]; }

  // Canonical form: sorted list of sorted triangle keys.
  std::vector<std::array<VertexId, 3>> canonical() const;

 private:
  Triangulation(PointSet points, std::vector<Triangle> triangles);

  PointSet points_;
  std::vector<Triangle> triangles_;
  std::vector<Edge> edges_;
  std::map<Edge, std::vector<int>> edge_triangles_;
  std::vector<std::vector<VertexId>> neighbors_;
  std::vector<std::vector<int>> vertex_triangles_;
  std::size_t hull_size_ = 0;
};

inline Triangulation build_triangulation(PointSet points, std::vector<Triangle> triangles) {
  return Triangulation::build(std::move(points), std::move(triangles));
}

struct Measure {
  double max_angle = 0.0;
  std::vector<int> attaining;  // triangle indices with max angle >= max_angle - tie_tol
};

Measure measure(const Triangulation& t, double tie_tol = kDefaultTieTol);

// Strict improvement order: lower measure, or equal measure (within tie_tol)
// with a strictly smaller set of attaining triangles.
bool improves(const Triangulation& t1, const Triangulation& t2, double tie_tol = kDefaultTieTol);

// Same comparison on precomputed measures; both must come from triangulations
// of one point set.
bool improves(const Triangulation& t1, const Measure& m1, const Triangulation& t2,
              const Measure& m2, double tie_tol);

std::size_t combinatorial_distance(const Triangulation& t, VertexId u, VertexId v);
std::size_t diameter(const Triangulation& t);

// Every triangle's angles sorted descending, concatenated. Lexicographic
// order on this vector refines the min-max measure.
std::vector<double> sorted_angle_vector(const Triangulation& t);

}  // namespace manta
