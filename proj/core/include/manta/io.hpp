#pragma once

#include "manta/edge_insertion.hpp"
#include "manta/manta_ray.hpp"
#include "manta/triangulation.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace manta {

using Labels = std::vector<std::pair<std::string, VertexId>>;

// "x y" per line; blank lines and '#' comments ignored. Throws InvalidInput.
std::vector<Point> parse_points(std::string_view text);

// Triangulation document: {"points": [[x,y],...], "triangles": [[i,j,k],...]}
// with an optional "labels" object mapping names to vertex ids.
struct TriangulationDoc {
  std::vector<Point> points;
  std::vector<Triangle> triangles;
  Labels labels;
};

TriangulationDoc parse_triangulation_json(std::string_view text);
std::string triangulation_to_json(const Triangulation& t, const Labels& labels = {});
std::string instance_to_json(const MantaRayInstance& inst);
std::string trace_to_json(const std::vector<TraceEntry>& trace);
std::string report_to_json(const PropositionReport& report);
std::string reports_to_json(const std::vector<PropositionReport>& reports);

std::string read_file(const std::string& path);
// Writes through a sibling temporary file and renames it into place.
void write_file_atomic(const std::string& path, std::string_view content);

}  // namespace manta
