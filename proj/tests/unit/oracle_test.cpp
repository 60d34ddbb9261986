#include "support/test_support.hpp"

#include "manta/errors.hpp"
#include "manta/manta_ray.hpp"
#include "manta/oracle.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace manta;

TEST_CASE("enumeration counts") {
  CHECK(enumerate_triangulations(PointSet({{0, 0}, {1, 0}, {0, 1}})).size() == 1);
  CHECK(enumerate_triangulations(PointSet({{0, 0}, {1, 0}, {1, 1}, {0, 1}})).size() == 2);
  std::vector<Point> pentagon;
  for (int i = 0; i < 5; ++i) pentagon.push_back({std::cos(2 * kPi * i / 5), std::sin(2 * kPi * i / 5)});
  CHECK(enumerate_triangulations(PointSet(pentagon)).size() == 5);
  // One point strictly inside a triangle: only the star from it.
  CHECK(enumerate_triangulations(PointSet({{0, 0}, {4, 0}, {0, 4}, {1, 1}})).size() == 1);
}

TEST_CASE("convex position counts are Catalan numbers") {
  const std::size_t catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (int k = 3; k <= 9; ++k) {
    std::vector<Point> pts;
    for (int i = 0; i < k; ++i) pts.push_back({std::cos(2 * kPi * i / k), std::sin(2 * kPi * i / k)});
    CHECK(enumerate_triangulations(PointSet(pts)).size() == catalan[k - 2]);
  }
}

TEST_CASE("enumeration with collinear points") {
  // Two collinear triples on the hull.
  const PointSet ps({{0, 0}, {1, 0}, {2, 0}, {2, 1}, {1, 1}, {0, 1}});
  const auto all = enumerate_triangulations(ps);
  for (const auto& t : all) CHECK(t.triangles().size() == 4);
  // Hexagon count 14, minus those using chord 0-2 or 3-5 through a middle
  // point: 14 - (5 + 5 - 2) = 6.
  CHECK(all.size() == 6);
}

TEST_CASE("enumerated triangulations are distinct, valid and equal in size") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 10; ++trial) {
    const PointSet ps(testing::random_general_points(rng, 5 + trial % 4));
    const auto all = enumerate_triangulations(ps);
    std::set<std::vector<std::array<VertexId, 3>>> seen;
    const auto f = all.front().triangles().size();
    for (const auto& t : all) {
      CHECK(t.triangles().size() == f);
      CHECK(seen.insert(t.canonical()).second);
    }
    const auto best = optimum_of(all);
    for (const auto& t : all) CHECK(measure(best).max_angle <= measure(t).max_angle);
    for (const auto& t : all) CHECK_FALSE(improves(t, best));
  }
}

TEST_CASE("optimum examples") {
  const PointSet tri({{0, 0}, {1, 0}, {0, 1}});
  CHECK(brute_force_optimum(tri).triangles().size() == 1);

  const PointSet sq({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  const auto a = brute_force_optimum(sq);
  CHECK(measure(a).max_angle == doctest::Approx(kPi / 2).epsilon(1e-12));
  CHECK(a.canonical() == brute_force_optimum(sq).canonical());

  const auto inst = generate({.n = 1});
  const auto best = brute_force_optimum(inst.triangulation.point_set());
  CHECK(best.canonical() == inst.fan_from_p().canonical());
}

TEST_CASE("guards") {
  std::vector<Point> many;
  for (int i = 0; i < 11; ++i) many.push_back({std::cos(0.5 * i), std::sin(0.5 * i)});
  CHECK_THROWS_AS(enumerate_triangulations(PointSet(many)), TooLarge);
  std::vector<Point> eight;
  for (int i = 0; i < 8; ++i) eight.push_back({std::cos(2 * kPi * i / 8), std::sin(2 * kPi * i / 8)});
  CHECK_THROWS_AS(enumerate_triangulations(PointSet(eight), 100), CapExceeded);
  CHECK(enumerate_triangulations(PointSet(eight), 132).size() == 132);
}
