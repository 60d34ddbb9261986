#pragma once

#include "manta/triangulation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace manta {

struct SvgOptions {
  double width_px = 800.0;
  std::vector<std::string> labels;  // per vertex id; empty strings are skipped
  std::optional<Edge> highlight;    // drawn bold; edges it crosses are dashed
  bool shade_channel = false;       // fill the two sides of the highlight's channel
};

// Bounding box plus 5% padding, y pointing up. Output depends only on the
// inputs, so renders can be compared byte for byte.
std::string render_svg(const Triangulation& t, const SvgOptions& options = {});

}  // namespace manta
