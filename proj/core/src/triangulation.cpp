#include "manta/triangulation.hpp"

#include "manta/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <set>
#include <string>

namespace manta {

std::array<VertexId, 3> Triangle::key() const {
  auto k = v;
  std::sort(k.begin(), k.end());
  return k;
}

PointSet::PointSet(std::vector<Point> points) {
  if (points.size() < 3) throw InvalidInput("point set needs at least 3 points");
  for (const Point& p : points) {
    if (!is_finite(p)) throw InvalidInput("point set contains a non-finite coordinate");
  }
  std::vector<Point> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidInput("point set contains duplicate points");
  }
  points_ = std::make_shared<const std::vector<Point>>(std::move(points));
}

bool PointSet::same_as(const PointSet& other) const {
  return points_ == other.points_ || *points_ == *other.points_;
}

std::vector<VertexId> convex_hull(std::span<const Point> points) {
  std::vector<VertexId> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](VertexId a, VertexId b) { return points[a] < points[b]; });
  if (order.size() < 3) return order;

  std::vector<VertexId> hull(2 * order.size());
  std::size_t k = 0;
  for (VertexId id : order) {
    while (k >= 2 && orient_sign(points[hull[k - 2]], points[hull[k - 1]], points[id]) <= 0) --k;
    hull[k++] = id;
  }
  const std::size_t lower = k + 1;
  for (auto it = order.rbegin() + 1; it != order.rend(); ++it) {
    while (k >= lower && orient_sign(points[hull[k - 2]], points[hull[k - 1]], points[*it]) <= 0) --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);
  return hull;
}

std::size_t hull_boundary_count(std::span<const Point> points) {
  const auto hull = convex_hull(points);
  std::vector<bool> on(points.size(), false);
  for (VertexId h : hull) on[static_cast<std::size_t>(h)] = true;
  if (hull.size() >= 2) {
    for (std::size_t i = 0; i < hull.size(); ++i) {
      const Point& a = points[hull[i]];
      const Point& b = points[hull[(i + 1) % hull.size()]];
      for (std::size_t p = 0; p < points.size(); ++p) {
        if (!on[p] && on_open_segment(points[p], a, b)) on[p] = true;
      }
    }
  }
  return static_cast<std::size_t>(std::count(on.begin(), on.end(), true));
}

double polygon_area(std::span<const Point> points, std::span<const VertexId> ring) {
  double twice = 0.0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Point& p = points[ring[i]];
    const Point& q = points[ring[(i + 1) % ring.size()]];
    twice += p.x * q.y - q.x * p.y;
  }
  return 0.5 * twice;
}

namespace {

[[noreturn]] void invalid(const std::string& why) { throw InvalidTriangulation(why); }

bool strictly_inside(const Point& p, const Point& a, const Point& b, const Point& c) {
  return orient_sign(a, b, p) > 0 && orient_sign(b, c, p) > 0 && orient_sign(c, a, p) > 0;
}

}  // namespace

Triangulation::Triangulation(PointSet points, std::vector<Triangle> triangles)
    : points_(std::move(points)), triangles_(std::move(triangles)) {}

Triangulation Triangulation::build(PointSet points, std::vector<Triangle> triangles) {
  const auto n = static_cast<VertexId>(points.size());
  std::set<std::array<VertexId, 3>> keys;
  for (Triangle& t : triangles) {
    for (VertexId id : t.v) {
      if (id < 0 || id >= n) invalid("triangle references vertex " + std::to_string(id));
    }
    if (t.v[0] == t.v[1] || t.v[1] == t.v[2] || t.v[0] == t.v[2]) invalid("triangle repeats a vertex");
    const int o = orient_sign(points[t.v[0]], points[t.v[1]], points[t.v[2]]);
    if (o == 0) invalid("degenerate triangle");
    if (o < 0) std::swap(t.v[1], t.v[2]);
    if (!keys.insert(t.key()).second) invalid("duplicate triangle");
  }

  Triangulation tri(std::move(points), std::move(triangles));
  const PointSet& ps = tri.points_;
  const auto pts = ps.points();

  tri.neighbors_.assign(pts.size(), {});
  tri.vertex_triangles_.assign(pts.size(), {});
  for (std::size_t i = 0; i < tri.triangles_.size(); ++i) {
    const auto& v = tri.triangles_[i].v;
    for (int k = 0; k < 3; ++k) {
      tri.edge_triangles_[Edge(v[k], v[(k + 1) % 3])].push_back(static_cast<int>(i));
      tri.vertex_triangles_[static_cast<std::size_t>(v[k])].push_back(static_cast<int>(i));
    }
  }
  for (const auto& [e, ts] : tri.edge_triangles_) {
    if (ts.size() > 2) invalid("edge shared by more than two triangles");
    tri.edges_.push_back(e);
    tri.neighbors_[static_cast<std::size_t>(e.a)].push_back(e.b);
    tri.neighbors_[static_cast<std::size_t>(e.b)].push_back(e.a);
  }
  for (auto& nb : tri.neighbors_) {
    if (nb.empty()) invalid("vertex not covered by any triangle");
    std::sort(nb.begin(), nb.end());
  }

  const auto& edges = tri.edges_;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Point& a = pts[edges[i].a];
    const Point& b = pts[edges[i].b];
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (segments_cross(a, b, pts[edges[j].a], pts[edges[j].b])) invalid("crossing edges");
    }
    for (std::size_t p = 0; p < pts.size(); ++p) {
      if (on_open_segment(pts[p], a, b)) invalid("vertex lies on an edge");
    }
  }
  for (const Triangle& t : tri.triangles_) {
    for (std::size_t p = 0; p < pts.size(); ++p) {
      if (strictly_inside(pts[p], pts[t.v[0]], pts[t.v[1]], pts[t.v[2]])) {
        invalid("vertex inside a triangle");
      }
    }
  }

  tri.hull_size_ = hull_boundary_count(pts);
  const std::size_t v = pts.size();
  const std::size_t h = tri.hull_size_;
  if (edges.size() != 3 * v - 3 - h || tri.triangles_.size() != 2 * v - 2 - h) {
    invalid("edge/triangle counts do not match a maximal triangulation");
  }

  const auto hull = convex_hull(pts);
  const double hull_area = polygon_area(pts, hull);
  double covered = 0.0;
  for (const Triangle& t : tri.triangles_) covered += polygon_area(pts, t.v);
  if (std::fabs(covered - hull_area) > 1e-9 * hull_area) invalid("triangles do not cover the convex hull");

  return tri;
}

bool Triangulation::has_edge(VertexId u, VertexId v) const {
  const auto& nb = neighbors_[static_cast<std::size_t>(u)];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::span<const int> Triangulation::triangles_on(Edge e) const {
  const auto it = edge_triangles_.find(e);
  if (it == edge_triangles_.end()) return {};
  return it->second;
}

std::vector<std::array<VertexId, 3>> Triangulation::canonical() const {
  std::vector<std::array<VertexId, 3>> out;
  out.reserve(triangles_.size());
  for (const Triangle& t : triangles_) out.push_back(t.key());
  std::sort(out.begin(), out.end());
  return out;
}

Measure measure(const Triangulation& t, double tie_tol) {
  const auto tris = t.triangles();
  std::vector<double> per(tris.size());
  for (std::size_t i = 0; i < tris.size(); ++i) {
    per[i] = max_angle(t.point(tris[i].v[0]), t.point(tris[i].v[1]), t.point(tris[i].v[2]));
  }
  Measure m;
  m.max_angle = *std::max_element(per.begin(), per.end());
  for (std::size_t i = 0; i < per.size(); ++i) {
    if (per[i] >= m.max_angle - tie_tol) m.attaining.push_back(static_cast<int>(i));
  }
  return m;
}

bool improves(const Triangulation& t1, const Measure& m1, const Triangulation& t2,
              const Measure& m2, double tie_tol) {
  if (!t1.point_set().same_as(t2.point_set())) throw MismatchedPointSet("triangulations of different point sets");
  if (m1.max_angle < m2.max_angle - tie_tol) return true;
  if (std::fabs(m1.max_angle - m2.max_angle) > tie_tol) return false;

  auto keys = [](const Triangulation& t, const Measure& m) {
    std::vector<std::array<VertexId, 3>> k;
    for (int i : m.attaining) k.push_back(t.triangles()[static_cast<std::size_t>(i)].key());
    std::sort(k.begin(), k.end());
    return k;
  };
  const auto k1 = keys(t1, m1);
  const auto k2 = keys(t2, m2);
  return k1.size() < k2.size() && std::includes(k2.begin(), k2.end(), k1.begin(), k1.end());
}

bool improves(const Triangulation& t1, const Triangulation& t2, double tie_tol) {
  return improves(t1, measure(t1, tie_tol), t2, measure(t2, tie_tol), tie_tol);
}

namespace {

std::vector<std::size_t> bfs(const Triangulation& t, VertexId source) {
  constexpr auto kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(t.vertex_count(), kUnseen);
  std::queue<VertexId> queue;
  dist[static_cast<std::size_t>(source)] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop();
    for (VertexId w : t.neighbors(u)) {
      if (dist[static_cast<std::size_t>(w)] == kUnseen) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push(w);
      }
    }
  }
  return dist;
}

}  // namespace

std::size_t combinatorial_distance(const Triangulation& t, VertexId u, VertexId v) {
  const auto n = static_cast<VertexId>(t.vertex_count());
  if (u < 0 || v < 0 || u >= n || v >= n) throw InvalidInput("vertex id out of range");
  return bfs(t, u)[static_cast<std::size_t>(v)];
}

std::size_t diameter(const Triangulation& t) {
  std::size_t best = 0;
  for (VertexId u = 0; u < static_cast<VertexId>(t.vertex_count()); ++u) {
    const auto d = bfs(t, u);
    best = std::max(best, *std::max_element(d.begin(), d.end()));
  }
  return best;
}

std::vector<double> sorted_angle_vector(const Triangulation& t) {
  std::vector<double> out;
  out.reserve(3 * t.triangles().size());
  for (const Triangle& tr : t.triangles()) {
    const auto a = triangle_angles(t.point(tr.v[0]), t.point(tr.v[1]), t.point(tr.v[2]));
    out.insert(out.end(), a.begin(), a.end());
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace manta
