#include "manta/svg.hpp"

#include "manta/edge_insertion.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

namespace manta {
namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const Triangulation& t, const SvgOptions& options) {
  const auto pts = t.point_set().points();
  double min_x = pts[0].x, max_x = pts[0].x, min_y = pts[0].y, max_y = pts[0].y;
  for (const Point& p : pts) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double span = std::max(max_x - min_x, max_y - min_y);
  const double pad = 0.05 * (span > 0 ? span : 1.0);
  min_x -= pad;
  max_x += pad;
  min_y -= pad;
  max_y += pad;
  const double scale = options.width_px / (max_x - min_x);
  const double height_px = (max_y - min_y) * scale;
  auto sx = [&](double x) { return fmt((x - min_x) * scale); };
  auto sy = [&](double y) { return fmt((max_y - y) * scale); };
  const double stroke = std::max(0.5, options.width_px / 800.0);

  std::optional<Channel> channel;
  std::set<Edge> crossed;
  if (options.highlight && !t.has_edge(options.highlight->a, options.highlight->b)) {
    channel = extract_channel(t, options.highlight->a, options.highlight->b);
    crossed.insert(channel->removed_edges.begin(), channel->removed_edges.end());
  }

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(options.width_px) << "\" height=\""
      << fmt(height_px) << "\" viewBox=\"0 0 " << fmt(options.width_px) << ' ' << fmt(height_px) << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  if (channel && options.shade_channel) {
    const std::pair<const Polygon*, const char*> sides[] = {{&channel->left, "#d9d9d9"}, {&channel->right, "#a6a6a6"}};
    for (const auto& [poly, fill] : sides) {
      svg << "<polygon class=\"channel\" fill=\"" << fill << "\" stroke=\"none\" points=\"";
      for (std::size_t i = 0; i < poly->size(); ++i) {
        svg << (i ? " " : "") << sx(poly->point(i).x) << ',' << sy(poly->point(i).y);
      }
      svg << "\"/>\n";
    }
  }

  for (const Edge& e : t.edges()) {
    const Point& a = pts[e.a];
    const Point& b = pts[e.b];
    const bool dashed = crossed.count(e) > 0;
    svg << "<line class=\"" << (dashed ? "crossed" : "edge") << "\" x1=\"" << sx(a.x) << "\" y1=\"" << sy(a.y)
        << "\" x2=\"" << sx(b.x) << "\" y2=\"" << sy(b.y) << "\" stroke=\"black\" stroke-width=\"" << fmt(stroke)
        << '"' << (dashed ? " stroke-dasharray=\"6,4\"" : "") << "/>\n";
  }

  if (options.highlight) {
    const Point& a = pts[options.highlight->a];
    const Point& b = pts[options.highlight->b];
    svg << "<line class=\"inserted\" x1=\"" << sx(a.x) << "\" y1=\"" << sy(a.y) << "\" x2=\"" << sx(b.x)
        << "\" y2=\"" << sy(b.y) << "\" stroke=\"black\" stroke-width=\"" << fmt(3 * stroke) << "\"/>\n";
  }

  for (std::size_t i = 0; i < pts.size(); ++i) {
    svg << "<circle cx=\"" << sx(pts[i].x) << "\" cy=\"" << sy(pts[i].y) << "\" r=\"" << fmt(2.5 * stroke)
        << "\" fill=\"black\"/>\n";
    if (i < options.labels.size() && !options.labels[i].empty()) {
      svg << "<text x=\"" << sx(pts[i].x) << "\" y=\"" << sy(pts[i].y) << "\" dx=\"4\" dy=\"-4\" font-size=\""
          << fmt(12 * stroke) << "\" font-family=\"sans-serif\">" << escape_xml(options.labels[i]) << "</text>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace manta
