#pragma once

#include <array>
#include <cmath>
#include <numbers>

namespace manta {

inline constexpr double kPi = std::numbers::pi;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr bool operator==(const Point&, const Point&) = default;
  friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

inline bool is_finite(const Point& p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// Non-degenerate segment; construction throws InvalidInput when a == b.
class Segment {
 public:
  Segment(Point a, Point b);
  const Point& a() const { return a_; }
  const Point& b() const { return b_; }

 private:
  Point a_;
  Point b_;
};

enum class Orientation : int { Negative = -1, Zero = 0, Positive = 1 };

// Exact sign of the signed area of (a, b, c). Positive means counterclockwise.
Orientation orient2d(const Point& a, const Point& b, const Point& c);

inline int orient_sign(const Point& a, const Point& b, const Point& c) {
  return static_cast<int>(orient2d(a, b, c));
}

// True iff s and t meet in exactly one point interior to both.
bool segments_cross(const Segment& s, const Segment& t);
bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d);

// True iff p lies on the closed segment ab minus its endpoints.
bool on_open_segment(const Point& p, const Point& a, const Point& b);

// Angle at vertex `at` between rays at->p and at->q, in [0, pi].
double angle_between(const Point& at, const Point& p, const Point& q);

// Interior angles at a, b, c. Throws DegenerateTriangle if collinear.
std::array<double, 3> triangle_angles(const Point& a, const Point& b, const Point& c);

double max_angle(const Point& a, const Point& b, const Point& c);

}  // namespace manta
