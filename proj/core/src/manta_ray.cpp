#include "manta/manta_ray.hpp"

#include "manta/edge_insertion.hpp"
#include "manta/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace manta {

double auto_theta(double omega) { return 2.0 * (kPi - omega) / 3.0; }

std::vector<std::string> ClaimMargins::violations() const {
  std::vector<std::string> out;
  if (!(omega_minus_phi > 0)) out.emplace_back("phi < omega");
  if (!(psi_minus_omega > 0)) out.emplace_back("psi > omega");
  if (!(omega_minus_alpha > 0)) out.emplace_back("alpha < omega");
  if (!(omega_minus_beta > 0)) out.emplace_back("beta < omega");
  return out;
}

ClaimMargins margins_of(const ClaimAngles& a) {
  return {a.omega - a.phi, a.psi - a.omega, a.omega - a.alpha, a.omega - a.beta};
}

std::string MantaRayInstance::name(VertexId id) const {
  const int n = params.n;
  if (id == O()) return "O";
  if (id == P()) return "P";
  if (id >= A(0) && id <= A(n)) return "A" + std::to_string(id - A(0));
  if (id >= B(0) && id <= B(n)) return "B" + std::to_string(id - B(0));
  throw InvalidInput("vertex id out of range");
}

std::vector<std::pair<std::string, VertexId>> MantaRayInstance::labels() const {
  std::vector<std::pair<std::string, VertexId>> out;
  for (VertexId id = 0; id <= P(); ++id) out.emplace_back(name(id), id);
  return out;
}

namespace {

ClaimAngles claim_angles_of(std::span<const Point> pts, int n, const Point& ray_direction);

// Counterclockwise hull order of the instance without P: O, A_0..A_n, then
// (after P) B_n..B_0.
std::vector<Triangle> p_fan(int n, VertexId p) {
  const auto a = [](int i) { return 1 + i; };
  const auto b = [n](int i) { return 2 + n + i; };
  std::vector<Triangle> fan;
  fan.push_back(Triangle{{0, a(0), p}});
  for (int i = 0; i < n; ++i) fan.push_back(Triangle{{a(i), a(i + 1), p}});
  for (int i = n; i > 0; --i) fan.push_back(Triangle{{p, b(i), b(i - 1)}});
  fan.push_back(Triangle{{p, b(0), 0}});
  return fan;
}

std::vector<Triangle> manta_triangles(int n) {
  const auto a = [](int i) { return 1 + i; };
  const auto b = [n](int i) { return 2 + n + i; };
  const VertexId p = 2 * n + 3;
  std::vector<Triangle> tris{Triangle{{0, a(0), b(0)}}};
  for (int i = 0; i < n; ++i) {
    tris.push_back(Triangle{{a(i), a(i + 1), b(i)}});
    tris.push_back(Triangle{{a(i + 1), b(i + 1), b(i)}});
  }
  tris.push_back(Triangle{{a(n), p, b(n)}});
  return tris;
}

double largest_angle(std::span<const Point> pts, std::span<const Triangle> tris) {
  double worst = 0.0;
  for (const Triangle& t : tris) {
    const Point& a = pts[t.v[0]];
    const Point& b = pts[t.v[1]];
    const Point& c = pts[t.v[2]];
    if (orient2d(a, b, c) == Orientation::Zero) return kPi;
    worst = std::max(worst, max_angle(a, b, c));
  }
  return worst;
}

// Pushes chain points outward by single ulps until no interior chain vertex
// is a reflex dent. Rounding can leave an exactly collinear chain slightly
// concave, which would drop the point off the hull.
void repair_chain(std::vector<Point>& pts, int n) {
  for (int pass = 0; pass < 4096; ++pass) {
    bool changed = false;
    for (int i = 1; i < n; ++i) {
      Point& mid = pts[static_cast<std::size_t>(1 + i)];
      while (orient_sign(pts[static_cast<std::size_t>(i)], mid, pts[static_cast<std::size_t>(2 + i)]) < 0) {
        mid.x = std::nextafter(mid.x, std::numeric_limits<double>::infinity());
        changed = true;
      }
    }
    if (!changed) return;
  }
  throw InvalidParams("could not make the ray chain convex");
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

struct Layout {
  std::vector<Point> points;  // without P
  Point ray_direction;
};

// `turns[i]` rotates step i (A_i -> A_{i+1}) toward the axis, cumulatively.
Layout lay_out(const MantaRayParams& p, double theta, const std::vector<double>& turns) {
  const int n = p.n;
  const double base_angle = 0.5 * (kPi - p.omega);
  const double half = 0.5 * p.base_length;
  const double height = half / std::tan(0.5 * p.omega);
  const double elevation = base_angle + theta;

  std::vector<Point> a_chain{Point{half, height}};
  double turned = 0.0;
  for (int i = 0; i < n; ++i) {
    turned += turns.empty() ? 0.0 : turns[static_cast<std::size_t>(i)];
    const Point& cur = a_chain.back();
    const double width = 2.0 * cur.x;
    a_chain.push_back(Point{cur.x + width * std::cos(elevation + turned), cur.y + width * std::sin(elevation + turned)});
  }

  Layout out;
  out.ray_direction = Point{std::cos(elevation), std::sin(elevation)};
  out.points.push_back(Point{0.0, 0.0});
  out.points.insert(out.points.end(), a_chain.begin(), a_chain.end());
  if (turns.empty()) repair_chain(out.points, n);
  for (int i = 0; i <= n; ++i) {
    const Point& a = out.points[static_cast<std::size_t>(1 + i)];
    out.points.push_back(Point{-a.x, a.y});
  }
  return out;
}

void check_params(const MantaRayParams& p) {
  if (p.n < 0 || p.n > kMaxStripLength) throw InvalidParams("n must lie in [0, " + std::to_string(kMaxStripLength) + "]");
  if (!(p.omega > 0.0 && p.omega < kPi)) throw InvalidParams("omega must lie in (0, pi)");
  if (p.theta && !(*p.theta > 0.0 && *p.theta < 0.5 * kPi)) throw InvalidParams("theta must lie in (0, pi/2)");
  if (p.p_distance && !(std::isfinite(*p.p_distance) && *p.p_distance > 0.0)) {
    throw InvalidParams("p_distance must be positive");
  }
  if (!(std::isfinite(p.base_length) && p.base_length > 0.0)) throw InvalidParams("base_length must be positive");
  if (!(p.p_margin >= 0.0)) throw InvalidParams("p_margin must be non-negative");
}

MantaRayInstance assemble(MantaRayParams params, const std::vector<double>& turns, double perturbation,
                          std::uint64_t seed) {
  check_params(params);
  const double theta = params.theta.value_or(auto_theta(params.omega));
  params.theta = theta;
  Layout layout = lay_out(params, theta, turns);

  const int n = params.n;
  const ClaimAngles angles = claim_angles_of(layout.points, n, layout.ray_direction);
  if (params.require_claims) {
    const auto violated = margins_of(angles).violations();
    if (!violated.empty()) {
      std::ostringstream msg;
      msg << "claim inequality violated:";
      for (const auto& v : violated) msg << " [" << v << "]";
      msg << " (omega=" << angles.omega << ", theta=" << angles.theta << ", phi=" << angles.phi
          << ", psi=" << angles.psi << ", alpha=" << angles.alpha << ", beta=" << angles.beta << ")";
      throw ClaimViolated(msg.str());
    }
  }

  const bool p_auto = !params.p_distance;
  Point p;
  if (!p_auto) {
    p = Point{0.0, layout.points[static_cast<std::size_t>(1 + n)].y + *params.p_distance};
  } else {
    p = place_p(MantaRaySkeleton{n, params.omega, params.base_length, layout.points}, params.p_margin);
    params.p_distance = p.y - layout.points[static_cast<std::size_t>(1 + n)].y;
  }
  layout.points.push_back(p);

  std::optional<Triangulation> tri;
  try {
    tri = Triangulation::build(PointSet(layout.points), manta_triangles(n));
  } catch (const Error& e) {
    throw InvalidParams(std::string("parameters do not give a valid triangulation: ") + e.what());
  }
  return MantaRayInstance{params, layout.ray_direction, p_auto, perturbation, seed, std::move(*tri), angles};
}

}  // namespace

Triangulation MantaRayInstance::fan_from_p() const {
  return Triangulation::build(triangulation.point_set(), p_fan(params.n, P()));
}

Point place_p(const MantaRaySkeleton& skeleton, double margin) {
  const int n = skeleton.n;
  if (skeleton.points.size() != static_cast<std::size_t>(2 * n + 3)) throw InvalidInput("skeleton has wrong point count");
  const double top = skeleton.points[static_cast<std::size_t>(1 + n)].y;
  const double limit = skeleton.omega - margin;

  std::vector<Point> pts = skeleton.points;
  pts.emplace_back();
  const VertexId p = 2 * n + 3;
  auto tris = p_fan(n, p);
  tris.push_back(Triangle{{1 + n, p, 2 + 2 * n}});

  double distance = skeleton.base_length;
  for (int k = 0; k < 1100 && std::isfinite(distance); ++k, distance *= 2.0) {
    pts.back() = Point{0.0, top + distance};
    if (largest_angle(pts, tris) < limit) return pts.back();
  }
  throw CannotPlace("no position of P keeps every fan angle below omega - margin");
}

namespace {

// Points in instance order (O, A_0..A_n, B_0..B_n[, P]).
ClaimAngles claim_angles_of(std::span<const Point> pts, int n, const Point& ray_direction) {
  const auto a_at = [&](int i) { return pts[static_cast<std::size_t>(1 + i)]; };
  const auto b_at = [&](int i) { return pts[static_cast<std::size_t>(2 + n + i)]; };
  const Point& o = pts[0];
  const Point a0 = a_at(0);
  const Point b0 = b_at(0);

  // Without a strip the ray is virtual: one step of the construction.
  const double width0 = std::hypot(b0.x - a0.x, b0.y - a0.y);
  const Point virtual_a1{a0.x + width0 * ray_direction.x, a0.y + width0 * ray_direction.y};
  auto chain = [&](int i) -> Point {
    if (i <= n) return a_at(i);
    return virtual_a1;
  };
  auto vec_angle = [](double ux, double uy, double vx, double vy) {
    return std::atan2(std::fabs(ux * vy - uy * vx), ux * vx + uy * vy);
  };

  ClaimAngles r;
  r.omega = angle_between(o, a0, b0);
  r.theta_prime = angle_between(a0, o, b0) + angle_between(b0, o, a0);
  const Point a1 = chain(1);
  r.theta = vec_angle(a0.x - o.x, a0.y - o.y, a1.x - a0.x, a1.y - a0.y);
  r.psi = angle_between(a0, o, a1);
  r.theta_psi_gap = (kPi - r.psi) - r.theta;

  // Normal to AB at A, pointing away from O.
  double nx = -(b0.y - a0.y);
  double ny = b0.x - a0.x;
  if (nx * (a0.x - o.x) + ny * (a0.y - o.y) < 0) {
    nx = -nx;
    ny = -ny;
  }
  r.alpha = vec_angle(o.x - a0.x, o.y - a0.y, nx, ny);

  const int steps = std::max(n, 1);
  double phi_min = kPi, phi_max = 0.0, beta_min = kPi, beta_max = 0.0;
  for (int i = 0; i < steps; ++i) {
    const Point ai = chain(i);
    const Point bi = b_at(std::min(i, n));
    const double phi = angle_between(ai, chain(i + 1), bi);
    phi_min = std::min(phi_min, phi);
    phi_max = std::max(phi_max, phi);
    const Point next = chain(i + 1);
    const double beta = vec_angle(ai.x - next.x, ai.y - next.y, nx, ny);
    beta_min = std::min(beta_min, beta);
    beta_max = std::max(beta_max, beta);
  }
  r.phi = phi_max;
  r.phi_spread = phi_max - phi_min;
  r.beta = beta_max;
  r.beta_spread = beta_max - beta_min;
  return r;
}

}  // namespace

ClaimAngles measure_claim_angles(const MantaRayInstance& inst) {
  return claim_angles_of(inst.triangulation.point_set().points(), inst.n(), inst.ray_direction);
}

MantaRayInstance generate(const MantaRayParams& params) { return assemble(params, {}, 0.0, 0); }

bool has_three_collinear(std::span<const Point> points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      for (std::size_t k = j + 1; k < points.size(); ++k) {
        if (orient2d(points[i], points[j], points[k]) == Orientation::Zero) return true;
      }
    }
  }
  return false;
}

PropositionReport verify_proposition(const MantaRayInstance& inst, double tie_tol, std::vector<InsertionProbe>* probes) {
  const Triangulation& t = inst.triangulation;
  const auto n = static_cast<std::size_t>(inst.n());

  PropositionReport r;
  r.n = inst.n();
  r.vertex_count = t.vertex_count();
  r.triangle_count = t.triangles().size();
  r.edge_count = t.edges().size();
  r.expected_edge_count = 4 * n + 5;
  r.diameter = diameter(t);
  r.expected_diameter = n + 2;
  r.op_distance = combinatorial_distance(t, inst.O(), inst.P());
  r.op_crossings = extract_channel(t, inst.O(), inst.P()).removed_edges.size();
  // Segment OP crosses every rung A_iB_i (n + 1) and every diagonal A_{i+1}B_i (n).
  r.expected_op_crossings = 2 * n + 1;
  r.claim_margins = margins_of(inst.angles);
  r.perturbation = inst.perturbation;

  for (const Edge& e : candidate_pairs(t)) {
    try {
      const auto outcome = edge_insertion(t, e.a, e.b, tie_tol);
      ++r.insertions_tested;
      const std::size_t crossings = outcome.channel.removed_edges.size();
      if (outcome.improved) {
        r.improving_insertions.emplace_back(inst.name(e.a), inst.name(e.b));
        if (crossings == 1) ++r.flip_improvements;
      }
      if (probes) probes->push_back(InsertionProbe{e.a, e.b, crossings, outcome.improved});
    } catch (const VertexOnSegment&) {
      ++r.insertions_skipped;
    }
  }

  const bool only_op = r.improving_insertions.size() == 1 && r.improving_insertions.front().first == "O" &&
                       r.improving_insertions.front().second == "P";
  r.verdict = r.edge_count == r.expected_edge_count && r.diameter == r.expected_diameter &&
              r.op_distance == r.expected_diameter && r.op_crossings == r.expected_op_crossings && only_op &&
              r.claim_margins.all_positive();
  return r;
}

MantaRayInstance perturb_general_position(const MantaRayInstance& inst, double eps, std::uint64_t seed,
                                          double tie_tol) {
  const double base = inst.params.base_length;
  if (!(eps >= 0.0) || !(eps < 1e-3 * base)) throw InvalidParams("perturbation must satisfy 0 <= eps < 1e-3 * base_length");
  if (eps == 0.0) return inst;

  std::uint64_t state = seed;
  std::vector<double> turns(static_cast<std::size_t>(inst.n()));
  for (double& turn : turns) {
    const double unit = static_cast<double>(splitmix64(state) >> 11) * 0x1p-53;
    turn = (0.5 + 0.5 * unit) * eps / base;
  }

  MantaRayParams params = inst.params;
  // P is re-placed for the moved chain unless the caller pinned it.
  if (inst.p_auto) params.p_distance.reset();
  MantaRayInstance out = [&] {
    try {
      return assemble(params, turns, eps, seed);
    } catch (const ClaimViolated& e) {
      throw PerturbationBreaksClaim(e.what());
    }
  }();
  if (has_three_collinear(out.triangulation.point_set().points())) {
    throw PerturbationBreaksClaim("perturbed instance still has three collinear points");
  }
  if (!verify_proposition(out, tie_tol).verdict) throw PerturbationBreaksClaim("perturbed instance fails verification");
  return out;
}

}  // namespace manta
