#pragma once

#include "manta/polygon.hpp"
#include "manta/triangulation.hpp"

#include <cstddef>
#include <vector>

namespace manta {

// The region swept by segment u-v, split by it into two polygons. An edge
// whose two triangles are both crossed, but which is not crossed itself, stays
// and appears twice on its side's boundary.
struct Channel {
  VertexId u = 0;
  VertexId v = 0;
  std::vector<Edge> removed_edges;     // in order along u -> v
  std::vector<int> crossed_triangles;  // indices into the source triangulation
  Polygon left;                        // left of u -> v, starts [u, v, ...]
  Polygon right;                       // right of u -> v, starts [v, u, ...]
};

// Throws EdgeAlreadyPresent, VertexOnSegment, SegmentOutsideHull, InvalidInput.
Channel extract_channel(const Triangulation& t, VertexId u, VertexId v);

struct InsertionOutcome {
  Triangulation result;
  Channel channel;
  bool improved = false;
};

InsertionOutcome edge_insertion(const Triangulation& t, VertexId u, VertexId v,
                                double tie_tol = kDefaultTieTol);

// Deterministic starting triangulation: lexicographic sweep, each new point
// joined to every hull edge it sees.
Triangulation arbitrary_triangulation(const PointSet& points);

struct TraceEntry {
  VertexId u = 0;
  VertexId v = 0;
  std::size_t crossings = 0;
  double measure_before = 0.0;
  double measure_after = 0.0;

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

enum class ScanMode { Sequential, Parallel };
enum class ScanOrder { Lexicographic, ReverseLexicographic };

struct AlgorithmOptions {
  double tie_tol = kDefaultTieTol;
  std::size_t max_rounds = 0;  // 0 selects 10 * |edges|
  ScanMode mode = ScanMode::Sequential;
  ScanOrder order = ScanOrder::Lexicographic;
  unsigned threads = 0;  // parallel mode only; 0 selects hardware concurrency
};

struct AlgorithmResult {
  Triangulation final;
  std::vector<TraceEntry> trace;
};

// Repeats: scan candidate pairs in order, accept the first insertion that
// improves the current triangulation; stops when a full scan finds none.
// Throws RoundLimitExceeded if more than max_rounds insertions are accepted.
AlgorithmResult edge_insertion_algorithm(const Triangulation& initial, const AlgorithmOptions& options = {});
AlgorithmResult edge_insertion_algorithm(const PointSet& points, const AlgorithmOptions& options = {});

// Candidate pairs in scan order: non-adjacent u < v.
std::vector<Edge> candidate_pairs(const Triangulation& t, ScanOrder order = ScanOrder::Lexicographic);

}  // namespace manta
