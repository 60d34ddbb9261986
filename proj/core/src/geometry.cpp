#include "manta/geometry.hpp"

#include "manta/errors.hpp"

#include <algorithm>
#include <cmath>

namespace manta {

Segment::Segment(Point a, Point b) : a_(a), b_(b) {
  if (a == b) throw InvalidInput("zero-length segment");
}

bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int o1 = orient_sign(a, b, c);
  const int o2 = orient_sign(a, b, d);
  if (o1 == 0 || o2 == 0 || o1 == o2) return false;
  const int o3 = orient_sign(c, d, a);
  const int o4 = orient_sign(c, d, b);
  return o3 != 0 && o4 != 0 && o3 != o4;
}

bool segments_cross(const Segment& s, const Segment& t) {
  return segments_cross(s.a(), s.b(), t.a(), t.b());
}

bool on_open_segment(const Point& p, const Point& a, const Point& b) {
  if (p == a || p == b) return false;
  if (orient2d(a, b, p) != Orientation::Zero) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

double angle_between(const Point& at, const Point& p, const Point& q) {
  const double ux = p.x - at.x;
  const double uy = p.y - at.y;
  const double vx = q.x - at.x;
  const double vy = q.y - at.y;
  return std::atan2(std::fabs(ux * vy - uy * vx), ux * vx + uy * vy);
}

std::array<double, 3> triangle_angles(const Point& a, const Point& b, const Point& c) {
  if (orient2d(a, b, c) == Orientation::Zero) throw DegenerateTriangle("collinear triangle");
  return {angle_between(a, b, c), angle_between(b, c, a), angle_between(c, a, b)};
}

double max_angle(const Point& a, const Point& b, const Point& c) {
  const auto t = triangle_angles(a, b, c);
  return std::max({t[0], t[1], t[2]});
}

}  // namespace manta
