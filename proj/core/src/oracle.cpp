#include "manta/oracle.hpp"

#include "manta/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace manta {
namespace {

using Mask = std::uint64_t;

struct Search {
  std::vector<Edge> edges;
  std::vector<Mask> crossing;  // crossing[i]: edges that properly cross edge i
  std::size_t target = 0;
  std::size_t cap = 0;
  std::vector<Mask> found;

  void run(std::size_t index, Mask chosen, std::size_t count) {
    if (count + (edges.size() - index) < target) return;
    if (index == edges.size()) {
      if (count == target) {
        if (found.size() >= cap) throw CapExceeded("more triangulations than the cap");
        found.push_back(chosen);
      }
      return;
    }
    const Mask bit = Mask{1} << index;
    if (chosen & crossing[index]) {
      run(index + 1, chosen, count);
      return;
    }
    run(index + 1, chosen | bit, count + 1);
    // Leaving a compatible edge out is only maximal if a later edge blocks it.
    const Mask later = ~((bit << 1) - 1);
    Mask blockers = crossing[index] & later;
    bool blockable = false;
    while (blockers) {
      const int j = std::countr_zero(blockers);
      blockers &= blockers - 1;
      if (!(chosen & crossing[static_cast<std::size_t>(j)])) {
        blockable = true;
        break;
      }
    }
    if (blockable) run(index + 1, chosen, count);
  }
};

bool strictly_inside(const Point& p, const Point& a, const Point& b, const Point& c) {
  return orient_sign(a, b, p) > 0 && orient_sign(b, c, p) > 0 && orient_sign(c, a, p) > 0;
}

}  // namespace

std::vector<Triangulation> enumerate_triangulations(const PointSet& points, std::size_t cap) {
  const std::size_t n = points.size();
  if (n > kMaxOraclePoints) throw TooLarge("oracle supports at most 10 points");
  const auto pts = points.points();

  Search search;
  search.cap = cap;
  for (VertexId a = 0; a < static_cast<VertexId>(n); ++a) {
    for (VertexId b = a + 1; b < static_cast<VertexId>(n); ++b) {
      bool clear = true;
      for (std::size_t p = 0; p < n && clear; ++p) clear = !on_open_segment(pts[p], pts[a], pts[b]);
      if (clear) search.edges.emplace_back(a, b);
    }
  }
  const std::size_t m = search.edges.size();
  search.crossing.assign(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const Edge& e = search.edges[i];
      const Edge& f = search.edges[j];
      if (segments_cross(pts[e.a], pts[e.b], pts[f.a], pts[f.b])) {
        search.crossing[i] |= Mask{1} << j;
        search.crossing[j] |= Mask{1} << i;
      }
    }
  }
  search.target = 3 * n - 3 - hull_boundary_count(pts);
  search.run(0, 0, 0);

  std::vector<Triangulation> out;
  out.reserve(search.found.size());
  for (Mask chosen : search.found) {
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < m; ++i) {
      if (chosen & (Mask{1} << i)) {
        adj[search.edges[i].a][search.edges[i].b] = adj[search.edges[i].b][search.edges[i].a] = 1;
      }
    }
    std::vector<Triangle> tris;
    for (VertexId a = 0; a < static_cast<VertexId>(n); ++a) {
      for (VertexId b = a + 1; b < static_cast<VertexId>(n); ++b) {
        if (!adj[a][b]) continue;
        for (VertexId c = b + 1; c < static_cast<VertexId>(n); ++c) {
          if (!adj[a][c] || !adj[b][c]) continue;
          Triangle t{{a, b, c}};
          if (orient_sign(pts[a], pts[b], pts[c]) < 0) std::swap(t.v[1], t.v[2]);
          bool empty = true;
          for (std::size_t p = 0; p < n && empty; ++p) {
            empty = !strictly_inside(pts[p], pts[t.v[0]], pts[t.v[1]], pts[t.v[2]]);
          }
          if (empty) tris.push_back(t);
        }
      }
    }
    out.push_back(Triangulation::build(points, std::move(tris)));
  }
  std::sort(out.begin(), out.end(),
            [](const Triangulation& x, const Triangulation& y) { return x.canonical() < y.canonical(); });
  return out;
}

Triangulation optimum_of(const std::vector<Triangulation>& all, double tie_tol) {
  if (all.empty()) throw NoTriangulation("no triangulations to choose from");
  std::vector<Measure> measures;
  measures.reserve(all.size());
  for (const auto& t : all) measures.push_back(measure(t, tie_tol));
  double best = measures.front().max_angle;
  for (const auto& m : measures) best = std::min(best, m.max_angle);

  std::vector<std::size_t> near;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (measures[i].max_angle <= best + tie_tol) near.push_back(i);
  }
  std::vector<std::size_t> minimal;
  for (std::size_t i : near) {
    const bool dominated = std::any_of(near.begin(), near.end(), [&](std::size_t j) {
      return j != i && improves(all[j], measures[j], all[i], measures[i], tie_tol);
    });
    if (!dominated) minimal.push_back(i);
  }
  if (minimal.empty()) minimal = near;

  std::size_t pick = minimal.front();
  auto pick_key = sorted_angle_vector(all[pick]);
  for (std::size_t i : minimal) {
    auto key = sorted_angle_vector(all[i]);
    if (key < pick_key) {
      pick = i;
      pick_key = std::move(key);
    }
  }
  return all[pick];
}

Triangulation brute_force_optimum(const PointSet& points, double tie_tol) {
  return optimum_of(enumerate_triangulations(points), tie_tol);
}

}  // namespace manta
