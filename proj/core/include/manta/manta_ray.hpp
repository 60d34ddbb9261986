#pragma once

#include "manta/triangulation.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace manta {

inline constexpr double kDefaultOmega = 0.78 * kPi;
inline constexpr double kDefaultPMargin = 1e-6;
inline constexpr int kMaxStripLength = 100;

// Ray angle used when theta is left to "auto": two thirds of the exterior
// angle pi - omega at the apex. Valid exactly when omega > 10/13 pi.
double auto_theta(double omega);

struct MantaRayParams {
  int n = 1;                          // strip length
  double omega = kDefaultOmega;       // apex angle at O
  std::optional<double> theta{};      // ray angle against line OA; empty = auto
  std::optional<double> p_distance{};  // P height above A_n B_n; empty = auto
  double base_length = 1.0;           // |AB|
  double p_margin = kDefaultPMargin;  // slack below omega for automatic P placement
  bool require_claims = true;         // refuse instances violating the four inequalities
};

// Angles measured from coordinates. Per-index angles (phi over the strip,
// beta along the chain) report their maximum and spread.
struct ClaimAngles {
  double omega = 0.0;        // apex angle of OAB
  double theta = 0.0;        // ray r_A against the extension of OA beyond A
  double theta_prime = 0.0;  // exterior apex angle, pi - omega
  double phi = 0.0;          // angle A_{i+1} A_i B_i
  double psi = 0.0;          // angle O A A_1
  double alpha = 0.0;        // obtuse angle between line OA and the normal to AB at A
  double beta = 0.0;         // obtuse angle between r_A and the normal to AB at A_i
  double phi_spread = 0.0;
  double beta_spread = 0.0;
  double theta_psi_gap = 0.0;  // (pi - psi) - theta
};

struct ClaimMargins {
  double omega_minus_phi = 0.0;
  double psi_minus_omega = 0.0;
  double omega_minus_alpha = 0.0;
  double omega_minus_beta = 0.0;

  bool all_positive() const {
    return omega_minus_phi > 0 && psi_minus_omega > 0 && omega_minus_alpha > 0 && omega_minus_beta > 0;
  }
  // Human-readable list of violated inequalities; empty when all hold.
  std::vector<std::string> violations() const;
};

ClaimMargins margins_of(const ClaimAngles& a);

// Points of an instance before P is placed: O, A_0..A_n, B_0..B_n.
struct MantaRaySkeleton {
  int n = 0;
  double omega = kDefaultOmega;
  double base_length = 1.0;
  std::vector<Point> points;
};

class MantaRayInstance {
 public:
  MantaRayParams params;    // theta and p_distance resolved
  Point ray_direction;      // unit direction of r_A at A_0
  bool p_auto = true;       // P came from place_p
  double perturbation = 0.0;
  std::uint64_t seed = 0;
  Triangulation triangulation;
  ClaimAngles angles;

  int n() const { return params.n; }
  static VertexId O() { return 0; }
  VertexId A(int i) const { return 1 + i; }
  VertexId B(int i) const { return 2 + params.n + i; }
  VertexId P() const { return 2 * params.n + 3; }

  const Point& point(VertexId id) const { return triangulation.point(id); }
  std::string name(VertexId id) const;
  std::vector<std::pair<std::string, VertexId>> labels() const;  // in vertex-id order

  // Fan from P over the hull: the claimed optimum.
  Triangulation fan_from_p() const;
};

// Throws InvalidParams, ClaimViolated, CannotPlace.
MantaRayInstance generate(const MantaRayParams& params);

// Smallest P = (0, y(A_n) + base_length * 2^k), k >= 0, such that every
// angle of the P-fan and of triangle A_n P B_n is below omega - margin.
// Throws CannotPlace.
Point place_p(const MantaRaySkeleton& skeleton, double margin);

ClaimAngles measure_claim_angles(const MantaRayInstance& inst);

struct InsertionProbe {
  VertexId u = 0;
  VertexId v = 0;
  std::size_t crossings = 0;
  bool improved = false;
};

struct PropositionReport {
  int n = 0;
  std::size_t vertex_count = 0;
  std::size_t triangle_count = 0;
  std::size_t edge_count = 0;
  std::size_t expected_edge_count = 0;
  std::size_t diameter = 0;
  std::size_t expected_diameter = 0;
  std::size_t op_crossings = 0;
  std::size_t expected_op_crossings = 0;
  std::size_t op_distance = 0;
  std::vector<std::pair<std::string, std::string>> improving_insertions;
  std::size_t insertions_tested = 0;
  std::size_t insertions_skipped = 0;  // pairs whose segment runs through a vertex
  std::size_t flip_improvements = 0;   // improving insertions crossing exactly one edge
  ClaimMargins claim_margins;
  double perturbation = 0.0;
  bool verdict = false;
};

// Exhaustive check of the non-locality statement on one instance; every
// non-adjacent pair is tried. `probes`, when given, receives each attempt.
PropositionReport verify_proposition(const MantaRayInstance& inst, double tie_tol = kDefaultTieTol,
                                     std::vector<InsertionProbe>* probes = nullptr);

// Turns each chain step toward the axis by a seeded angle in
// [0.5, 1] * eps / base_length, making the chains strictly convex. eps = 0
// returns the instance unchanged. Throws InvalidParams when eps is too
// large and PerturbationBreaksClaim when the perturbed instance fails
// verification.
MantaRayInstance perturb_general_position(const MantaRayInstance& inst, double eps, std::uint64_t seed,
                                          double tie_tol = kDefaultTieTol);

bool has_three_collinear(std::span<const Point> points);

}  // namespace manta
