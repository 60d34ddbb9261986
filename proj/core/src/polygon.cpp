#include "manta/polygon.hpp"

#include "manta/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <utility>

namespace manta {

Polygon::Polygon(std::vector<Point> points, std::vector<VertexId> ids)
    : points_(std::move(points)), ids_(std::move(ids)) {
  const std::size_t m = points_.size();
  if (m < 3) throw NonSimplePolygon("polygon needs at least 3 vertices");
  if (ids_.size() != m) throw InvalidInput("polygon ids and points differ in length");

  // A point may repeat only as the same vertex where the boundary touches
  // itself (a channel side wrapped around a dangling edge).
  std::map<Point, VertexId> seen;
  for (std::size_t i = 0; i < m; ++i) {
    const auto [it, fresh] = seen.emplace(points_[i], ids_[i]);
    if (!fresh && it->second != ids_[i]) throw NonSimplePolygon("two vertices share a position");
    if (points_[i] == points_[(i + 1) % m]) throw NonSimplePolygon("repeated consecutive vertex");
  }
  for (std::size_t i = 0; i < m; ++i) {
    const Point& a = points_[i];
    const Point& b = points_[(i + 1) % m];
    for (std::size_t k = 0; k < m; ++k) {
      if (on_open_segment(points_[k], a, b)) throw NonSimplePolygon("vertex on a boundary edge");
    }
    for (std::size_t j = i + 2; j < m; ++j) {
      if (i == 0 && j == m - 1) continue;
      if (segments_cross(a, b, points_[j], points_[(j + 1) % m])) {
        throw NonSimplePolygon("boundary edges cross");
      }
    }
  }
  // The interior at the lexicographically smallest point spans less than a
  // half-turn, so each of its occurrences is a strictly convex corner.
  const Point low = *std::min_element(points_.begin(), points_.end());
  for (std::size_t i = 0; i < m; ++i) {
    if (points_[i] != low) continue;
    if (orient_sign(points_[(i + m - 1) % m], points_[i], points_[(i + 1) % m]) <= 0) {
      throw NonSimplePolygon("polygon is not counterclockwise");
    }
  }
}

Polygon Polygon::from_ring(std::span<const Point> parent, std::vector<VertexId> ring) {
  std::vector<Point> pts;
  pts.reserve(ring.size());
  for (VertexId id : ring) pts.push_back(parent[static_cast<std::size_t>(id)]);
  return Polygon(std::move(pts), std::move(ring));
}

bool Polygon::in_cone(std::size_t i, std::size_t j) const {
  const std::size_t m = size();
  const Point& a = points_[i];
  const Point& b = points_[j];
  const Point& prev = points_[(i + m - 1) % m];
  const Point& next = points_[(i + 1) % m];
  if (prev == next) {
    // Tip of a dangling edge: everything but the edge's own direction.
    return !(orient_sign(a, prev, b) == 0 && (prev.x - a.x) * (b.x - a.x) + (prev.y - a.y) * (b.y - a.y) > 0);
  }
  if (orient_sign(a, next, prev) >= 0) {
    return orient_sign(a, b, prev) > 0 && orient_sign(b, a, next) > 0;
  }
  return !(orient_sign(a, b, next) >= 0 && orient_sign(b, a, prev) >= 0);
}

bool Polygon::is_diagonal(std::size_t i, std::size_t j) const {
  const std::size_t m = size();
  if (i == j || (i + 1) % m == j || (j + 1) % m == i) return false;
  if (points_[i] == points_[j]) return false;
  if (!in_cone(i, j) || !in_cone(j, i)) return false;
  const Point& a = points_[i];
  const Point& b = points_[j];
  for (std::size_t k = 0; k < m; ++k) {
    if (k != i && k != j && on_open_segment(points_[k], a, b)) return false;
    const std::size_t l = (k + 1) % m;
    if (k == i || k == j || l == i || l == j) continue;
    if (segments_cross(a, b, points_[k], points_[l])) return false;
  }
  return true;
}

bool Polygon::contains_strictly(const Point& p) const {
  const std::size_t m = size();
  int winding = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const Point& a = points_[i];
    const Point& b = points_[(i + 1) % m];
    const int o = orient_sign(a, b, p);
    if (o == 0 && (on_open_segment(p, a, b) || p == a)) return false;
    if (a.y <= p.y) {
      if (b.y > p.y && o > 0) ++winding;
    } else if (b.y <= p.y && o < 0) {
      --winding;
    }
  }
  return winding != 0;
}

namespace {

constexpr double kInfeasible = std::numeric_limits<double>::infinity();
constexpr int kNoSplit = -1;

}  // namespace

Retriangulation dp_retriangulate(const Polygon& polygon) {
  const std::size_t m = polygon.size();
  // usable[i][j]: i-j is a boundary edge or an interior diagonal.
  std::vector<std::vector<char>> usable(m, std::vector<char>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const bool edge = j == i + 1 || (i == 0 && j == m - 1);
      usable[i][j] = usable[j][i] = edge || polygon.is_diagonal(i, j);
    }
  }

  std::vector<std::vector<double>> cost(m, std::vector<double>(m, kInfeasible));
  std::vector<std::vector<int>> split(m, std::vector<int>(m, kNoSplit));
  for (std::size_t i = 0; i + 1 < m; ++i) cost[i][i + 1] = 0.0;

  for (std::size_t len = 2; len < m; ++len) {
    for (std::size_t i = 0; i + len < m; ++i) {
      const std::size_t j = i + len;
      if (!usable[i][j]) continue;
      for (std::size_t k = i + 1; k < j; ++k) {
        if (cost[i][k] == kInfeasible || cost[k][j] == kInfeasible) continue;
        if (orient_sign(polygon.point(i), polygon.point(k), polygon.point(j)) <= 0) continue;
        const double c = std::max({max_angle(polygon.point(i), polygon.point(k), polygon.point(j)),
                                   cost[i][k], cost[k][j]});
        if (c < cost[i][j]) {
          cost[i][j] = c;
          split[i][j] = static_cast<int>(k);
        }
      }
    }
  }
  if (cost[0][m - 1] == kInfeasible) throw NoTriangulation("simple polygon admits no triangulation");

  Retriangulation out;
  out.cost = cost[0][m - 1];
  std::vector<std::pair<std::size_t, std::size_t>> stack{{0, m - 1}};
  while (!stack.empty()) {
    const auto [i, j] = stack.back();
    stack.pop_back();
    if (j - i < 2) continue;
    const auto k = static_cast<std::size_t>(split[i][j]);
    out.triangles.push_back(Triangle{{polygon.id(i), polygon.id(k), polygon.id(j)}});
    stack.emplace_back(i, k);
    stack.emplace_back(k, j);
  }
  return out;
}

namespace {

// Counterclockwise angle from direction d to direction e, in (0, 2 pi].
double ccw_turn(const Point& d, const Point& e) {
  const double t = std::atan2(d.x * e.y - d.y * e.x, d.x * e.x + d.y * e.y);
  return t > 0 ? t : t + 2 * kPi;
}

// At a vertex that occurs more than once, the chord must leave through the
// interior wedge of this occurrence, not another one's.
bool leaves_inside(const Polygon& p, std::size_t i, const Point& toward) {
  const std::size_t m = p.size();
  const Point& a = p.point(i);
  const Point& prev = p.point((i + m - 1) % m);
  const Point& next = p.point((i + 1) % m);
  const Point d{next.x - a.x, next.y - a.y};
  const double wedge = ccw_turn(d, {prev.x - a.x, prev.y - a.y});
  const double dir = ccw_turn(d, {toward.x - a.x, toward.y - a.y});
  return dir < wedge && dir < 2 * kPi;
}

bool occurs_twice(const Polygon& p, std::size_t i) {
  for (std::size_t k = 0; k < p.size(); ++k)
    if (k != i && p.point(k) == p.point(i)) return true;
  return false;
}

// Diagonal test independent of the cone test used by the DP: the open
// segment must avoid the boundary and its midpoint must lie inside.
bool interior_chord(const Polygon& p, std::size_t i, std::size_t j) {
  const std::size_t m = p.size();
  if ((i + 1) % m == j || (j + 1) % m == i) return true;
  const Point& a = p.point(i);
  const Point& b = p.point(j);
  if (a == b) return false;
  if (occurs_twice(p, i) && !leaves_inside(p, i, b)) return false;
  if (occurs_twice(p, j) && !leaves_inside(p, j, a)) return false;
  for (std::size_t k = 0; k < m; ++k) {
    if (k != i && k != j && on_open_segment(p.point(k), a, b)) return false;
    const std::size_t l = (k + 1) % m;
    if (k == i || k == j || l == i || l == j) continue;
    if (segments_cross(a, b, p.point(k), p.point(l))) return false;
  }
  return p.contains_strictly(Point{0.5 * (a.x + b.x), 0.5 * (a.y + b.y)});
}

using TriangulationList = std::vector<std::vector<Triangle>>;

const TriangulationList& enumerate_range(const Polygon& p, std::size_t i, std::size_t j,
                                         const std::vector<std::vector<char>>& chord,
                                         std::map<std::pair<std::size_t, std::size_t>, TriangulationList>& memo) {
  const auto key = std::make_pair(i, j);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  TriangulationList result;
  if (j == i + 1) {
    result.emplace_back();
  } else {
    for (std::size_t k = i + 1; k < j; ++k) {
      if (!chord[i][k] || !chord[k][j]) continue;
      if (orient_sign(p.point(i), p.point(k), p.point(j)) <= 0) continue;
      const auto& left = enumerate_range(p, i, k, chord, memo);
      const auto& right = enumerate_range(p, k, j, chord, memo);
      for (const auto& l : left) {
        for (const auto& r : right) {
          auto combined = l;
          combined.insert(combined.end(), r.begin(), r.end());
          combined.push_back(Triangle{{p.id(i), p.id(k), p.id(j)}});
          result.push_back(std::move(combined));
        }
      }
    }
  }
  return memo.emplace(key, std::move(result)).first->second;
}

}  // namespace

std::vector<std::vector<Triangle>> enumerate_polygon_triangulations(const Polygon& polygon) {
  const std::size_t m = polygon.size();
  if (m > kMaxEnumeratedPolygon) throw TooLarge("polygon too large to enumerate");
  std::vector<std::vector<char>> chord(m, std::vector<char>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) chord[i][j] = chord[j][i] = interior_chord(polygon, i, j);
  }
  std::map<std::pair<std::size_t, std::size_t>, TriangulationList> memo;
  return enumerate_range(polygon, 0, m - 1, chord, memo);
}

}  // namespace manta
