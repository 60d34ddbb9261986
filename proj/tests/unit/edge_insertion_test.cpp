#include "support/test_support.hpp"

#include "manta/edge_insertion.hpp"
#include "manta/errors.hpp"
#include "manta/manta_ray.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace manta;

namespace {

using Keys = std::vector<std::array<VertexId, 3>>;

std::set<std::array<VertexId, 3>> key_set(const Triangulation& t) {
  const auto c = t.canonical();
  return {c.begin(), c.end()};
}

std::size_t triangles_changed(const Triangulation& a, const Triangulation& b) {
  const auto ka = key_set(a), kb = key_set(b);
  std::size_t only_a = 0;
  for (const auto& k : ka) only_a += !kb.contains(k);
  return only_a;
}

// Edges of t crossed by segment u-v, found by brute force.
std::set<Edge> crossed_edges(const Triangulation& t, VertexId u, VertexId v) {
  std::set<Edge> out;
  for (const Edge& e : t.edges())
    if (segments_cross(t.point(u), t.point(v), t.point(e.a), t.point(e.b))) out.insert(e);
  return out;
}

}  // namespace

TEST_CASE("flip is a one-crossing insertion") {
  const PointSet kite({{0, 0}, {2, -1}, {4, 0}, {2, 1}});
  const auto t = build_triangulation(kite, {{{0, 1, 2}}, {{0, 2, 3}}});
  const auto ch = extract_channel(t, 1, 3);
  CHECK(ch.removed_edges == std::vector<Edge>{Edge(0, 2)});
  CHECK(ch.left.size() == 3);
  CHECK(ch.right.size() == 3);
  CHECK(ch.left.id(0) == 1);
  CHECK(ch.left.id(1) == 3);
  CHECK(ch.right.id(0) == 3);
  CHECK(ch.right.id(1) == 1);

  const auto out = edge_insertion(t, 1, 3);
  const auto other = build_triangulation(kite, {{{0, 1, 3}}, {{1, 2, 3}}});
  CHECK(out.result.canonical() == other.canonical());
  CHECK(out.improved);
}

TEST_CASE("extract_channel errors") {
  const PointSet kite({{0, 0}, {2, -1}, {4, 0}, {2, 1}});
  const auto t = build_triangulation(kite, {{{0, 1, 2}}, {{0, 2, 3}}});
  CHECK_THROWS_AS(extract_channel(t, 0, 2), EdgeAlreadyPresent);
  CHECK_THROWS_AS(extract_channel(t, 0, 0), InvalidInput);
  CHECK_THROWS_AS(extract_channel(t, 0, 9), InvalidInput);

  const PointSet line({{0, 0}, {1, 0}, {2, 0}, {1, 1}, {1, -1}});
  const auto tl = arbitrary_triangulation(line);
  CHECK_THROWS_AS(extract_channel(tl, 0, 2), VertexOnSegment);

}

TEST_CASE("channel of O-P in T_n") {
  for (int n = 1; n <= 6; ++n) {
    const auto inst = generate({.n = n});
    const auto& t = inst.triangulation;
    const auto ch = extract_channel(t, inst.O(), inst.P());
    const auto brute = crossed_edges(t, inst.O(), inst.P());
    CHECK(std::set<Edge>(ch.removed_edges.begin(), ch.removed_edges.end()) == brute);
    // Every triangle is crossed, so all 2n+1 interior edges go.
    CHECK(ch.removed_edges.size() == static_cast<std::size_t>(2 * n + 1));
    CHECK(ch.crossed_triangles.size() == t.triangles().size());
    CHECK(ch.removed_edges.front() == Edge(inst.A(0), inst.B(0)));
    CHECK(ch.removed_edges.back() == Edge(inst.A(n), inst.B(n)));
    CHECK(ch.left.size() + ch.right.size() == t.vertex_count() + 2);
  }
}

TEST_CASE("O-A_1 crosses only the base edge") {
  for (int n = 1; n <= 5; ++n) {
    const auto inst = generate({.n = n});
    const auto ch = extract_channel(inst.triangulation, inst.O(), inst.A(1));
    CHECK(crossed_edges(inst.triangulation, inst.O(), inst.A(1)) == std::set<Edge>{Edge(inst.A(0), inst.B(0))});
    CHECK(ch.removed_edges == std::vector<Edge>{Edge(inst.A(0), inst.B(0))});
  }
}

TEST_CASE("insertions in T_n") {
  for (int n = 1; n <= 5; ++n) {
    const auto inst = generate({.n = n});
    const auto op = edge_insertion(inst.triangulation, inst.O(), inst.P());
    CHECK(op.improved);
    CHECK(op.result.canonical() == inst.fan_from_p().canonical());
    for (int i = 1; i <= n; ++i) {
      CHECK_FALSE(edge_insertion(inst.triangulation, inst.O(), inst.A(i)).improved);
      CHECK_FALSE(edge_insertion(inst.triangulation, inst.O(), inst.B(i)).improved);
    }
  }
}

TEST_CASE("insertion preserves triangle count and validity") {
  std::mt19937_64 rng(41);
  int flips = 0;
  for (int trial = 0; trial < 15; ++trial) {
    const auto t = arbitrary_triangulation(PointSet(testing::random_general_points(rng, 10)));
    for (const Edge& e : candidate_pairs(t)) {
      const auto out = edge_insertion(t, e.a, e.b);
      CHECK(out.result.triangles().size() == t.triangles().size());
      CHECK(out.result.edges().size() == t.edges().size());
      CHECK(out.result.has_edge(e.a, e.b));
      CHECK(std::set<Edge>(out.channel.removed_edges.begin(), out.channel.removed_edges.end()) ==
            crossed_edges(t, e.a, e.b));
      for (const Edge& r : out.channel.removed_edges) CHECK_FALSE(out.result.has_edge(r.a, r.b));
      CHECK(out.improved == improves(out.result, t));
      if (out.channel.removed_edges.size() == 1) {
        ++flips;
        CHECK(triangles_changed(t, out.result) == 2);
      }
    }
  }
  CHECK(flips > 0);
}

TEST_CASE("candidate_pairs ordering") {
  const auto t = arbitrary_triangulation(PointSet({{0, 0}, {3, 0}, {3, 3}, {0, 3}, {1, 1.2}, {2.1, 1.9}}));
  const auto lex = candidate_pairs(t);
  auto rev = candidate_pairs(t, ScanOrder::ReverseLexicographic);
  CHECK(std::is_sorted(lex.begin(), lex.end()));
  for (const Edge& e : lex) CHECK_FALSE(t.has_edge(e.a, e.b));
  std::reverse(rev.begin(), rev.end());
  CHECK(rev == lex);
  const std::size_t v = t.vertex_count();
  CHECK(lex.size() == v * (v - 1) / 2 - t.edges().size());
}

TEST_CASE("arbitrary_triangulation") {
  const auto three = arbitrary_triangulation(PointSet({{0, 0}, {1, 0}, {0, 1}}));
  CHECK(three.triangles().size() == 1);
  // Collinear prefix in sweep order.
  const auto fan = arbitrary_triangulation(PointSet({{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1}}));
  CHECK(fan.triangles().size() == 3);
  CHECK_THROWS_AS(arbitrary_triangulation(PointSet({{0, 0}, {1, 1}, {2, 2}})), InvalidInput);
  std::mt19937_64 rng(42);
  const PointSet ps(testing::random_general_points(rng, 30));
  CHECK(arbitrary_triangulation(ps).canonical() == arbitrary_triangulation(ps).canonical());
}

TEST_CASE("algorithm on tiny inputs") {
  const auto r = edge_insertion_algorithm(PointSet({{0, 0}, {1, 0}, {0, 1}}));
  CHECK(r.trace.empty());
  CHECK(r.final.triangles().size() == 1);
}

TEST_CASE("algorithm from T_n reaches the fan through O-P") {
  for (int n = 1; n <= 4; ++n) {
    const auto inst = generate({.n = n});
    const auto r = edge_insertion_algorithm(inst.triangulation);
    REQUIRE(r.trace.size() == 1);
    CHECK(r.trace[0].u == inst.O());
    CHECK(r.trace[0].v == inst.P());
    CHECK(r.trace[0].crossings == static_cast<std::size_t>(2 * n + 1));
    CHECK(r.final.canonical() == inst.fan_from_p().canonical());
  }
}

TEST_CASE("algorithm trace is strictly improving and final is locally optimal") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    const PointSet ps(testing::random_general_points(rng, 12));
    const auto start = arbitrary_triangulation(ps);
    const auto r = edge_insertion_algorithm(start);
    double prev = measure(start).max_angle;
    for (const auto& step : r.trace) {
      CHECK(step.measure_before == prev);
      CHECK(step.measure_after <= step.measure_before + kDefaultTieTol);
      prev = step.measure_after;
    }
    CHECK(measure(r.final).max_angle == prev);
    for (const Edge& e : candidate_pairs(r.final)) CHECK_FALSE(edge_insertion(r.final, e.a, e.b).improved);
  }
}

TEST_CASE("algorithm is deterministic across modes; scan order does not change the optimum value") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 10; ++trial) {
    const PointSet ps(testing::random_general_points(rng, 14));
    const auto seq = edge_insertion_algorithm(ps);
    const auto again = edge_insertion_algorithm(ps);
    const auto par = edge_insertion_algorithm(ps, {.mode = ScanMode::Parallel, .threads = 4});
    const auto par1 = edge_insertion_algorithm(ps, {.mode = ScanMode::Parallel, .threads = 1});
    CHECK(seq.trace == again.trace);
    CHECK(seq.trace == par.trace);
    CHECK(seq.trace == par1.trace);
    CHECK(seq.final.canonical() == par.final.canonical());
    const auto rev = edge_insertion_algorithm(ps, {.order = ScanOrder::ReverseLexicographic});
    CHECK(std::abs(measure(rev.final).max_angle - measure(seq.final).max_angle) <= 1e-9);
  }
}

TEST_CASE("round limit") {
  std::mt19937_64 rng(45);
  for (;;) {
    const PointSet ps(testing::random_general_points(rng, 12));
    const auto r = edge_insertion_algorithm(ps);
    if (r.trace.size() < 2) continue;
    CHECK_THROWS_AS(edge_insertion_algorithm(ps, {.max_rounds = r.trace.size() - 1}), RoundLimitExceeded);
    CHECK_NOTHROW(edge_insertion_algorithm(ps, {.max_rounds = r.trace.size()}));
    break;
  }
}

TEST_CASE("channel around a dangling edge") {
  // Segment 2-5 crosses both triangles on edge 1-4 but not the edge itself,
  // so 1-4 survives and vertex 1 appears twice on the left side.
  const PointSet ps({{0.69792853007887945, 0.37011608154399211}, {0.12711561544240027, 0.28625182437376911},
                     {0.20765382687859557, 0.034508934734992364}, {0.24994524163626822, 0.032181533821225544},
                     {0.45822188737942177, 0.34960937139498338}, {0.99629380884552865, 0.64493984723587161},
                     {0.33467139261154383, 0.088905094824420675}, {0.82336607982727905, 0.49795041390666334},
                     {0.21527690073625447, 0.1513738905463862}, {0.94518808207426586, 0.047127582299419782}});
  const auto t = build_triangulation(ps, {{{1, 2, 8}}, {{8, 2, 3}}, {{8, 3, 6}}, {{1, 8, 6}}, {{1, 6, 4}},
                                          {{4, 6, 0}}, {{4, 0, 7}}, {{1, 4, 7}}, {{6, 3, 9}}, {{0, 6, 9}},
                                          {{7, 0, 9}}, {{7, 9, 5}}, {{1, 7, 5}}});
  const auto ch = extract_channel(t, 2, 5);
  CHECK(std::vector<VertexId>(ch.left.ids().begin(), ch.left.ids().end()) == std::vector<VertexId>{2, 5, 1, 4, 1, 8});
  CHECK(ch.removed_edges.size() == 7);
  const auto out = edge_insertion(t, 2, 5);
  CHECK(out.result.has_edge(1, 4));
  CHECK(out.result.has_edge(2, 5));
  CHECK(out.result.triangles().size() == t.triangles().size());
}
