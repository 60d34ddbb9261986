#pragma once

#include "manta/triangulation.hpp"

#include <cstddef>
#include <vector>

namespace manta {

inline constexpr std::size_t kMaxOraclePoints = 10;
inline constexpr std::size_t kDefaultOracleCap = 1'000'000;

// All triangulations of a small point set, as maximal crossing-free edge
// sets, returned in canonical order. Throws TooLarge above kMaxOraclePoints
// and CapExceeded when more than `cap` exist.
std::vector<Triangulation> enumerate_triangulations(const PointSet& points, std::size_t cap = kDefaultOracleCap);

// The optimum under the improvement order. Incomparable co-optima are
// resolved by the lexicographically smallest descending angle vector.
Triangulation brute_force_optimum(const PointSet& points, double tie_tol = kDefaultTieTol);

// Same, choosing from an already enumerated list.
Triangulation optimum_of(const std::vector<Triangulation>& all, double tie_tol = kDefaultTieTol);

}  // namespace manta
