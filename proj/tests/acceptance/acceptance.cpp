// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include "support/test_support.hpp"

#include "manta/edge_insertion.hpp"
#include "manta/errors.hpp"
#include "manta/io.hpp"
#include "manta/manta_ray.hpp"
#include "manta/oracle.hpp"
#include "manta/polygon.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#ifndef MANTA_CLI_PATH
#define MANTA_CLI_PATH "manta"
#endif
#ifndef MANTA_ACCEPTANCE_WORKDIR
#define MANTA_ACCEPTANCE_WORKDIR "acceptance_work"
#endif

using namespace manta;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    failures.push_back(what);
  }

  std::string summary() const {
    std::string s = detail.str();
    if (failures.empty()) return s;
    s += " | failed: " + failures.front();
    for (std::size_t i = 1; i < std::min<std::size_t>(failures.size(), 3); ++i) s += "; " + failures[i];
    if (failures.size() > 3) s += "; (+" + std::to_string(failures.size() - 3) + " more)";
    return s;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(const char* id, const char* title, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto t0 = Clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  const double secs = seconds_since(t0);
  if (!out.pass) ++failures;
  std::printf("%s %s: %s [%.2fs] %s\n", out.pass ? "PASS" : "FAIL", id, title, secs, out.summary().c_str());
  std::fflush(stdout);
}

std::string sz(std::size_t v) { return std::to_string(v); }

// 1. Structure of T_n for n in 1..25, all within one second.
void structure(Outcome& out) {
  const auto t0 = Clock::now();
  for (int n = 1; n <= 25; ++n) {
    const auto inst = generate({.n = n});
    const auto& t = inst.triangulation;
    const auto un = static_cast<std::size_t>(n);
    const std::string at = " at n=" + std::to_string(n);
    out.require(t.vertex_count() == 2 * un + 4, "vertices " + sz(t.vertex_count()) + at);
    out.require(t.edges().size() == 4 * un + 5, "edges " + sz(t.edges().size()) + at);
    out.require(t.triangles().size() == 2 * un + 2, "triangles " + sz(t.triangles().size()) + at);
    out.require(diameter(t) == un + 2, "diameter " + sz(diameter(t)) + at);
    out.require(combinatorial_distance(t, inst.O(), inst.P()) == un + 2, "dist(O,P)" + at);
  }
  const double secs = seconds_since(t0);
  out.require(secs < 1.0, "runtime " + std::to_string(secs) + "s >= 1s");
  out.detail << "n=1..25: V=2n+4, E=4n+5, F=2n+2, diam=dist(O,P)=n+2";
}

// 2. Exhaustive non-locality scan, and the crossing count of O-P.
void non_locality(Outcome& out) {
  const auto t0 = Clock::now();
  std::size_t tested = 0;
  std::ostringstream removed;
  for (int n = 1; n <= 10; ++n) {
    const auto inst = generate({.n = n});
    const auto& t = inst.triangulation;
    std::vector<Edge> improving;
    for (const Edge& e : candidate_pairs(t)) {
      ++tested;
      try {
        if (edge_insertion(t, e.a, e.b).improved) improving.push_back(e);
      } catch (const VertexOnSegment&) {
        out.require(false, "pair through a vertex at n=" + std::to_string(n));
      }
    }
    out.require(improving == std::vector<Edge>{Edge(inst.O(), inst.P())},
                "improving set is not exactly {(O,P)} at n=" + std::to_string(n));
    const auto k = extract_channel(t, inst.O(), inst.P()).removed_edges.size();
    removed << (n > 1 ? "," : "") << k;
    out.require(k == static_cast<std::size_t>(2 * n),
                "n=" + std::to_string(n) + ": O-P removes " + sz(k) + " edges, expected 2n=" + std::to_string(2 * n));
  }
  const double secs = seconds_since(t0);
  out.require(secs < 30.0, "runtime " + std::to_string(secs) + "s >= 30s");
  out.detail << tested << " insertions tested; only (O,P) improves for every n; O-P removed edges for n=1..10: "
             << removed.str();
}

// 3. No single flip improves T_n.
void flip_stuck(Outcome& out) {
  std::size_t flips = 0;
  for (int n = 1; n <= 10; ++n) {
    const auto inst = generate({.n = n});
    std::vector<InsertionProbe> probes;
    verify_proposition(inst, kDefaultTieTol, &probes);
    for (const auto& p : probes) {
      if (p.crossings != 1) continue;
      ++flips;
      out.require(!p.improved, "flip (" + inst.name(p.u) + "," + inst.name(p.v) + ") improves at n=" + std::to_string(n));
    }
  }
  out.require(flips > 0, "no flips examined");
  out.detail << flips << " flips examined, none improving";
}

// 4. Claim margins and placed-P fan angles.
void claims(Outcome& out) {
  double worst = INFINITY, worst_fan = INFINITY;
  for (int n = 1; n <= 10; ++n) {
    const auto inst = generate({.n = n});
    const auto m = margins_of(measure_claim_angles(inst));
    for (double v : {m.omega_minus_phi, m.psi_minus_omega, m.omega_minus_alpha, m.omega_minus_beta}) {
      worst = std::min(worst, v);
      out.require(v > 1e-6, "claim margin " + std::to_string(v) + " at n=" + std::to_string(n));
    }
    const auto fan = inst.fan_from_p();
    for (const auto& t : fan.triangles()) {
      for (double a : triangle_angles(fan.point(t.v[0]), fan.point(t.v[1]), fan.point(t.v[2]))) {
        worst_fan = std::min(worst_fan, inst.params.omega - a);
        out.require(a < inst.params.omega - 1e-6, "fan angle too large at n=" + std::to_string(n));
      }
    }
  }
  out.detail << "smallest claim margin " << worst << " rad; smallest fan slack " << worst_fan << " rad";
}

// 5. Algorithm vs brute-force oracle.
void optimality(Outcome& out) {
  const auto t0 = Clock::now();
  const auto inst = generate({.n = 1});
  const auto ps = inst.triangulation.point_set();
  const auto algo = edge_insertion_algorithm(inst.triangulation);
  const auto best = brute_force_optimum(ps);
  const double ma = measure(algo.final).max_angle, mb = measure(best).max_angle;
  out.require(std::abs(ma - mb) <= 1e-9, "n=1 manta: algorithm " + std::to_string(ma) + " vs oracle " + std::to_string(mb));
  out.require(best.canonical() == inst.fan_from_p().canonical(), "n=1 oracle optimum is not the fan from P");

  std::mt19937_64 rng(20240501);
  std::uniform_int_distribution<std::size_t> size(5, 8);
  int agree = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const PointSet rps(testing::random_general_points(rng, size(rng)));
    const double got = measure(edge_insertion_algorithm(rps).final).max_angle;
    const double want = measure(brute_force_optimum(rps)).max_angle;
    worst = std::max(worst, std::abs(got - want));
    if (std::abs(got - want) <= 1e-9) ++agree;
    else out.require(false, "random set " + std::to_string(trial) + ": " + std::to_string(got) + " vs " + std::to_string(want));
  }
  const double secs = seconds_since(t0);
  out.require(secs < 120.0, "runtime " + std::to_string(secs) + "s >= 120s");
  out.detail << "n=1 manta optimum is the fan (measure " << mb << "); random sets " << agree
             << "/100 agree, max deviation " << worst << " rad";
}

// 6. Polygon DP vs enumeration, and Catalan counts.
void dp_correctness(Outcome& out) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::size_t> size(5, 11);
  int convex = 0, channel = 0;
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    std::optional<Polygon> p;
    if (i % 2 == 0) {
      p = testing::random_convex_polygon(rng, size(rng));
      ++convex;
    } else {
      p = testing::random_channel_polygon(rng, 5, 11);
      out.require(p.has_value(), "could not draw a channel polygon");
      if (!p) continue;
      ++channel;
    }
    const double dp = dp_retriangulate(*p).cost;
    double best = INFINITY;
    for (const auto& tris : enumerate_polygon_triangulations(*p)) {
      double worst_angle = 0.0;
      for (const auto& t : tris) {
        auto at = [&](VertexId id) {
          for (std::size_t k = 0; k < p->size(); ++k)
            if (p->id(k) == id) return p->point(k);
          throw std::logic_error("id not in polygon");
        };
        worst_angle = std::max(worst_angle, max_angle(at(t.v[0]), at(t.v[1]), at(t.v[2])));
      }
      best = std::min(best, worst_angle);
    }
    worst = std::max(worst, std::abs(dp - best));
    out.require(std::abs(dp - best) <= 1e-12, "polygon " + std::to_string(i) + ": dp " + std::to_string(dp) +
                                                  " vs enumeration " + std::to_string(best));
  }
  const std::size_t catalan[] = {2, 5, 14, 42, 132, 429, 1430};
  for (std::size_t k = 4; k <= 10; ++k) {
    const auto count = enumerate_polygon_triangulations(testing::regular_polygon(k)).size();
    out.require(count == catalan[k - 4], "convex " + sz(k) + "-gon has " + sz(count) + " triangulations");
  }
  out.detail << convex << " convex + " << channel << " channel polygons, max |dp - min| " << worst
             << " rad; Catalan counts k=4..10 match";
}

// 7. Perturbed instances keep the verdict.
void perturbation(Outcome& out) {
  for (int n = 1; n <= 5; ++n) {
    const auto base = generate({.n = n});
    const auto inst = perturb_general_position(base, 1e-6 * base.params.base_length, 1000 + static_cast<std::uint64_t>(n));
    const auto pts = inst.triangulation.point_set().points();
    out.require(!testing::exact_three_collinear({pts.begin(), pts.end()}), "three collinear at n=" + std::to_string(n));
    out.require(verify_proposition(inst).verdict, "verdict false at n=" + std::to_string(n));
  }
  out.detail << "eps=1e-6*base, n=1..5: general position (exact check) and verdict true";
}

int run(const std::string& cmd) {
  const int rc = std::system((cmd + " > /dev/null 2>&1").c_str());
  return rc;
}

// 8. Byte-identical reports and traces.
void determinism(Outcome& out) {
  const fs::path dir = MANTA_ACCEPTANCE_WORKDIR;
  fs::create_directories(dir);
  const std::string cli = MANTA_CLI_PATH;
  auto path = [&](const char* name) { return (dir / name).string(); };

  out.require(run(cli + " verify --n 1..10 --out " + path("verify1.json")) == 0, "verify run 1 failed");
  out.require(run(cli + " verify --n 1..10 --out " + path("verify2.json")) == 0, "verify run 2 failed");
  const auto v1 = read_file(path("verify1.json")), v2 = read_file(path("verify2.json"));
  out.require(!v1.empty() && v1 == v2, "verify reports differ");

  // Library-level reports as well.
  std::vector<PropositionReport> r1, r2;
  for (int n = 1; n <= 10; ++n) r1.push_back(verify_proposition(generate({.n = n})));
  for (int n = 1; n <= 10; ++n) r2.push_back(verify_proposition(generate({.n = n})));
  out.require(reports_to_json(r1) == reports_to_json(r2), "library reports differ");

  // Traces: a manta instance and a random point set, sequential twice and parallel.
  out.require(run(cli + " generate --n 4 --out " + path("t4.json")) == 0, "generate failed");
  std::mt19937_64 rng(99);
  std::string pts;
  for (const Point& p : testing::random_general_points(rng, 40)) {
    char line[96];
    std::snprintf(line, sizeof line, "%.17g %.17g\n", p.x, p.y);
    pts += line;
  }
  write_file_atomic(path("random40.txt"), pts);
  std::size_t compared = 0;
  for (const char* input : {"t4.json", "random40.txt"}) {
    std::vector<std::string> traces;
    const std::vector<std::string> modes = {"", "", " --parallel --threads 4", " --parallel --threads 1"};
    for (std::size_t m = 0; m < modes.size(); ++m) {
      const std::string trace = path(("trace" + std::to_string(m) + ".json").c_str());
      const std::string final_out = path(("final" + std::to_string(m) + ".json").c_str());
      out.require(run(cli + " optimize " + path(input) + modes[m] + " --trace " + trace + " --out " + final_out) == 0,
                  std::string("optimize failed on ") + input);
      traces.push_back(read_file(trace) + read_file(final_out));
    }
    for (const auto& t : traces) {
      out.require(t == traces.front(), std::string("traces differ on ") + input);
      ++compared;
    }
  }
  out.detail << "verify --n 1..10 byte-identical across runs; " << compared
             << " optimize runs (sequential x2, parallel x2) identical";
}

}  // namespace

int main() {
  report("AC1", "T_n structure for n=1..25 in < 1 s", structure);
  report("AC2", "exhaustive non-locality for n=1..10", non_locality);
  report("AC3", "no diagonal flip improves T_n", flip_stuck);
  report("AC4", "claim inequalities and fan angles", claims);
  report("AC5", "algorithm matches brute-force optimum", optimality);
  report("AC6", "polygon DP matches enumeration", dp_correctness);
  report("AC7", "perturbation keeps the verdict", perturbation);
  report("AC8", "determinism of reports and traces", determinism);
  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
