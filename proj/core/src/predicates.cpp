#include "manta/geometry.hpp"

#include <array>
#include <cmath>
#include <cstddef>

namespace manta {
namespace {

// Error-free transformations (Knuth two-sum, fma two-product). The sum of
// the returned pair equals the exact result of the operation.
struct Pair {
  double hi;
  double lo;
};

inline Pair two_sum(double a, double b) {
  const double x = a + b;
  const double bv = x - a;
  const double av = x - bv;
  const double br = b - bv;
  const double ar = a - av;
  return {x, ar + br};
}

inline Pair two_product(double a, double b) {
  const double x = a * b;
  return {x, std::fma(a, b, -x)};
}

// Nonoverlapping expansion stored smallest-magnitude first.
template <std::size_t N>
class Expansion {
 public:
  void add(double b) {
    double q = b;
    std::size_t out = 0;
    for (std::size_t i = 0; i < size_; ++i) {
      const Pair s = two_sum(q, terms_[i]);
      q = s.hi;
      if (s.lo != 0.0) terms_[out++] = s.lo;
    }
    if (q != 0.0) terms_[out++] = q;
    size_ = out;
  }

  int sign() const {
    if (size_ == 0) return 0;
    const double top = terms_[size_ - 1];
    return top > 0.0 ? 1 : (top < 0.0 ? -1 : 0);
  }

 private:
  std::array<double, N> terms_{};
  std::size_t size_ = 0;
};

int orient_exact(const Point& a, const Point& b, const Point& c) {
  // (b-a)x(c-a) expanded into six coordinate products so no difference is rounded.
  const std::array<Pair, 6> products = {
      two_product(b.x, c.y),  two_product(-b.x, a.y), two_product(-a.x, c.y),
      two_product(-b.y, c.x), two_product(b.y, a.x),  two_product(a.y, c.x),
  };
  Expansion<16> sum;
  for (const Pair& p : products) {
    sum.add(p.lo);
    sum.add(p.hi);
  }
  return sum.sign();
}

constexpr double kEpsilon = 0x1p-53;
constexpr double kOrientErrBound = (3.0 + 16.0 * kEpsilon) * kEpsilon;

}  // namespace

Orientation orient2d(const Point& a, const Point& b, const Point& c) {
  const double left = (b.x - a.x) * (c.y - a.y);
  const double right = (b.y - a.y) * (c.x - a.x);
  const double det = left - right;
  const double bound = kOrientErrBound * (std::fabs(left) + std::fabs(right));
  int s = 0;
  if (det > bound) {
    s = 1;
  } else if (-det > bound) {
    s = -1;
  } else {
    s = orient_exact(a, b, c);
  }
  return static_cast<Orientation>(s);
}

}  // namespace manta
