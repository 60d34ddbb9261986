#include "manta/edge_insertion.hpp"

#include "manta/errors.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <thread>

namespace manta {
namespace {

std::array<VertexId, 3> rotated_to(const Triangle& t, VertexId first) {
  for (int k = 0; k < 3; ++k) {
    if (t.v[k] == first) return {t.v[k], t.v[(k + 1) % 3], t.v[(k + 2) % 3]};
  }
  throw InvalidInput("vertex not on triangle");
}

VertexId third_vertex(const Triangle& t, Edge e) {
  for (VertexId id : t.v) {
    if (id != e.a && id != e.b) return id;
  }
  throw InvalidInput("triangle does not contain edge");
}

void append_distinct(std::vector<VertexId>& chain, VertexId id) {
  if (chain.empty() || chain.back() != id) chain.push_back(id);
}

}  // namespace

Channel extract_channel(const Triangulation& t, VertexId u, VertexId v) {
  const auto n = static_cast<VertexId>(t.vertex_count());
  if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw InvalidInput("invalid vertex pair");
  if (t.has_edge(u, v)) throw EdgeAlreadyPresent("edge " + std::to_string(u) + "-" + std::to_string(v) + " already present");
  const Point& pu = t.point(u);
  const Point& pv = t.point(v);
  for (VertexId w = 0; w < n; ++w) {
    if (on_open_segment(t.point(w), pu, pv)) throw VertexOnSegment("segment passes through vertex " + std::to_string(w));
  }

  std::optional<int> current;
  VertexId right = -1;
  VertexId left = -1;
  for (int ti : t.triangles_at(u)) {
    const auto r = rotated_to(t.triangles()[static_cast<std::size_t>(ti)], u);
    if (orient_sign(pu, t.point(r[1]), pv) > 0 && orient_sign(pu, t.point(r[2]), pv) < 0) {
      current = ti;
      right = r[1];
      left = r[2];
      break;
    }
  }
  if (!current) throw SegmentOutsideHull("segment leaves the triangulated region at its start");

  std::vector<Edge> removed;
  std::vector<int> crossed{*current};
  std::vector<VertexId> left_chain;
  std::vector<VertexId> right_chain;
  while (true) {
    const Edge e(right, left);
    removed.push_back(e);
    append_distinct(left_chain, left);
    append_distinct(right_chain, right);

    int next = -1;
    for (int ti : t.triangles_on(e)) {
      if (ti != *current) next = ti;
    }
    if (next < 0) throw SegmentOutsideHull("segment leaves the convex hull");
    current = next;
    crossed.push_back(next);
    const VertexId c = third_vertex(t.triangles()[static_cast<std::size_t>(next)], e);
    if (c == v) break;
    if (orient_sign(pu, pv, t.point(c)) > 0) {
      left = c;
    } else {
      right = c;
    }
  }

  std::vector<VertexId> left_ring{u, v};
  left_ring.insert(left_ring.end(), left_chain.rbegin(), left_chain.rend());
  std::vector<VertexId> right_ring{v, u};
  right_ring.insert(right_ring.end(), right_chain.begin(), right_chain.end());

  const auto pts = t.point_set().points();
  return Channel{u,
                 v,
                 std::move(removed),
                 std::move(crossed),
                 Polygon::from_ring(pts, std::move(left_ring)),
                 Polygon::from_ring(pts, std::move(right_ring))};
}

InsertionOutcome edge_insertion(const Triangulation& t, VertexId u, VertexId v, double tie_tol) {
  Channel channel = extract_channel(t, u, v);

  std::vector<char> drop(t.triangles().size(), 0);
  for (int ti : channel.crossed_triangles) drop[static_cast<std::size_t>(ti)] = 1;
  std::vector<Triangle> triangles;
  for (std::size_t i = 0; i < drop.size(); ++i) {
    if (!drop[i]) triangles.push_back(t.triangles()[i]);
  }
  for (const Polygon* side : {&channel.left, &channel.right}) {
    auto re = dp_retriangulate(*side);
    triangles.insert(triangles.end(), re.triangles.begin(), re.triangles.end());
  }

  Triangulation result = Triangulation::build(t.point_set(), std::move(triangles));
  const bool improved = improves(result, t, tie_tol);
  return InsertionOutcome{std::move(result), std::move(channel), improved};
}

Triangulation arbitrary_triangulation(const PointSet& points) {
  const auto pts = points.points();
  std::vector<VertexId> order(pts.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return pts[a] < pts[b]; });

  std::size_t k = 2;
  while (k < order.size() && orient_sign(pts[order[0]], pts[order[1]], pts[order[k]]) == 0) ++k;
  if (k == order.size()) throw InvalidInput("all points are collinear");

  std::vector<Triangle> triangles;
  const VertexId apex = order[k];
  for (std::size_t i = 0; i + 1 < k; ++i) triangles.push_back(Triangle{{order[i], order[i + 1], apex}});

  // Counterclockwise hull, collinear boundary points kept.
  std::vector<VertexId> hull;
  if (orient_sign(pts[order[0]], pts[order[1]], pts[apex]) > 0) {
    hull.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
    hull.push_back(apex);
  } else {
    hull.push_back(apex);
    for (std::size_t i = k; i-- > 0;) hull.push_back(order[i]);
  }

  for (std::size_t idx = k + 1; idx < order.size(); ++idx) {
    const VertexId p = order[idx];
    const std::size_t h = hull.size();
    auto visible = [&](std::size_t i) {
      return orient_sign(pts[hull[i]], pts[hull[(i + 1) % h]], pts[p]) < 0;
    };
    std::size_t start = h;
    for (std::size_t i = 0; i < h; ++i) {
      if (visible(i) && !visible((i + h - 1) % h)) {
        start = i;
        break;
      }
    }
    if (start == h) throw InvalidInput("sweep point sees no hull edge");
    std::rotate(hull.begin(), hull.begin() + static_cast<std::ptrdiff_t>(start), hull.end());
    std::size_t count = 0;
    while (count < h && orient_sign(pts[hull[count]], pts[hull[(count + 1) % h]], pts[p]) < 0) {
      triangles.push_back(Triangle{{hull[(count + 1) % h], hull[count], p}});
      ++count;
    }
    std::vector<VertexId> next{hull[0], p};
    next.insert(next.end(), hull.begin() + static_cast<std::ptrdiff_t>(count), hull.end());
    hull = std::move(next);
  }
  return Triangulation::build(points, std::move(triangles));
}

std::vector<Edge> candidate_pairs(const Triangulation& t, ScanOrder order) {
  std::vector<Edge> out;
  const auto n = static_cast<VertexId>(t.vertex_count());
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (!t.has_edge(u, v)) out.emplace_back(u, v);
    }
  }
  if (order == ScanOrder::ReverseLexicographic) std::reverse(out.begin(), out.end());
  return out;
}

namespace {

// Result of trying one candidate; empty when the pair has no channel or
// does not improve.
std::optional<InsertionOutcome> try_candidate(const Triangulation& t, Edge e, double tie_tol) {
  try {
    auto outcome = edge_insertion(t, e.a, e.b, tie_tol);
    if (outcome.improved) return outcome;
  } catch (const VertexOnSegment&) {
  }
  return std::nullopt;
}

std::optional<InsertionOutcome> first_improving(const Triangulation& t, const std::vector<Edge>& candidates,
                                                const AlgorithmOptions& options) {
  if (options.mode == ScanMode::Sequential) {
    for (const Edge& e : candidates) {
      if (auto o = try_candidate(t, e, options.tie_tol)) return o;
    }
    return std::nullopt;
  }

  const unsigned threads = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  const std::size_t block = std::max<std::size_t>(1, 4 * threads);
  for (std::size_t begin = 0; begin < candidates.size(); begin += block) {
    const std::size_t end = std::min(candidates.size(), begin + block);
    std::vector<std::future<std::optional<InsertionOutcome>>> futures;
    futures.reserve(end - begin);
    for (std::size_t i = begin; i < end; ++i) {
      futures.push_back(std::async(std::launch::async, try_candidate, std::cref(t), candidates[i], options.tie_tol));
    }
    std::optional<InsertionOutcome> found;
    for (auto& f : futures) {
      auto o = f.get();
      if (!found && o) found = std::move(o);
    }
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace

AlgorithmResult edge_insertion_algorithm(const Triangulation& initial, const AlgorithmOptions& options) {
  const std::size_t max_rounds = options.max_rounds != 0 ? options.max_rounds : 10 * initial.edges().size();
  AlgorithmResult out{initial, {}};
  while (true) {
    auto found = first_improving(out.final, candidate_pairs(out.final, options.order), options);
    if (!found) return out;
    if (out.trace.size() >= max_rounds) throw RoundLimitExceeded("edge insertion did not converge");
    out.trace.push_back(TraceEntry{found->channel.u, found->channel.v, found->channel.removed_edges.size(),
                                   measure(out.final, options.tie_tol).max_angle,
                                   measure(found->result, options.tie_tol).max_angle});
    out.final = std::move(found->result);
  }
}

AlgorithmResult edge_insertion_algorithm(const PointSet& points, const AlgorithmOptions& options) {
  return edge_insertion_algorithm(arbitrary_triangulation(points), options);
}

}  // namespace manta
