#pragma once

#include "manta/geometry.hpp"
#include "manta/triangulation.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace manta {

// Counterclockwise polygon whose vertices carry ids from a parent point set.
// Consecutive collinear vertices are allowed, and so is a vertex occurring
// twice where the boundary runs both ways along a dangling edge (weakly
// simple), which happens on the sides of a channel.
class Polygon {
 public:
  // Throws NonSimplePolygon if the ring self-intersects, is clockwise, has
  // fewer than three vertices, or puts two different ids at one position.
  Polygon(std::vector<Point> points, std::vector<VertexId> ids);

  // Convenience for rings over a parent point set.
  static Polygon from_ring(std::span<const Point> parent, std::vector<VertexId> ring);

  std::size_t size() const { return points_.size(); }
  const Point& point(std::size_t i) const { return points_[i]; }
  VertexId id(std::size_t i) const { return ids_[i]; }
  std::span<const Point> points() const { return points_; }
  std::span<const VertexId> ids() const { return ids_; }

  // Locally interior at both endpoints and touching the boundary only at i, j.
  bool is_diagonal(std::size_t i, std::size_t j) const;

  // Winding-number containment; boundary points count as outside.
  bool contains_strictly(const Point& p) const;

 private:
  bool in_cone(std::size_t i, std::size_t j) const;

  std::vector<Point> points_;
  std::vector<VertexId> ids_;
};

struct Retriangulation {
  std::vector<Triangle> triangles;  // parent ids, counterclockwise
  double cost = 0.0;                // largest angle over `triangles`
};

// Min-max angle triangulation of a simple polygon by interval dynamic
// programming over boundary indices; ties go to the smallest split index.
Retriangulation dp_retriangulate(const Polygon& polygon);

inline constexpr std::size_t kMaxEnumeratedPolygon = 14;

// Every triangulation of the polygon (parent ids). Throws TooLarge beyond
// kMaxEnumeratedPolygon vertices.
std::vector<std::vector<Triangle>> enumerate_polygon_triangulations(const Polygon& polygon);

}  // namespace manta
