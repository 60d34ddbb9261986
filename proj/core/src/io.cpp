#include "manta/io.hpp"

#include "manta/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace manta {

using nlohmann::json;

std::vector<Point> parse_points(std::string_view text) {
  std::vector<Point> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    Point p;
    if (!(fields >> p.x)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw InvalidInput("line " + std::to_string(lineno) + ": expected 'x y'");
    }
    std::string rest;
    if (!(fields >> p.y) || (fields >> rest)) throw InvalidInput("line " + std::to_string(lineno) + ": expected 'x y'");
    if (!is_finite(p)) throw InvalidInput("line " + std::to_string(lineno) + ": non-finite coordinate");
    out.push_back(p);
  }
  return out;
}

TriangulationDoc parse_triangulation_json(std::string_view text) {
  TriangulationDoc doc;
  try {
    const json j = json::parse(text);
    for (const auto& p : j.at("points")) {
      if (p.size() != 2) throw InvalidInput("point entries must be [x, y]");
      doc.points.push_back(Point{p.at(0).get<double>(), p.at(1).get<double>()});
    }
    for (const auto& t : j.at("triangles")) {
      if (t.size() != 3) throw InvalidInput("triangle entries must be [i, j, k]");
      doc.triangles.push_back(Triangle{{t.at(0).get<VertexId>(), t.at(1).get<VertexId>(), t.at(2).get<VertexId>()}});
    }
    if (j.contains("labels")) {
      for (const auto& [name, id] : j.at("labels").items()) doc.labels.emplace_back(name, id.get<VertexId>());
      std::sort(doc.labels.begin(), doc.labels.end(),
                [](const auto& a, const auto& b) { return a.second < b.second; });
    }
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed triangulation JSON: ") + e.what());
  }
  return doc;
}

namespace {

using ojson = nlohmann::ordered_json;

ojson triangulation_json(const Triangulation& t, const Labels& labels) {
  ojson j;
  j["points"] = ojson::array();
  for (const Point& p : t.point_set().points()) j["points"].push_back({p.x, p.y});
  j["triangles"] = ojson::array();
  for (const Triangle& tr : t.triangles()) j["triangles"].push_back({tr.v[0], tr.v[1], tr.v[2]});
  if (!labels.empty()) {
    j["labels"] = ojson::object();
    for (const auto& [name, id] : labels) j["labels"][name] = id;
  }
  return j;
}

}  // namespace

std::string triangulation_to_json(const Triangulation& t, const Labels& labels) {
  return triangulation_json(t, labels).dump(1) + "\n";
}

std::string instance_to_json(const MantaRayInstance& inst) {
  ojson j = triangulation_json(inst.triangulation, inst.labels());
  j["params"] = {{"n", inst.params.n},
                 {"omega", inst.params.omega},
                 {"theta", inst.params.theta.value_or(0.0)},
                 {"p_distance", inst.params.p_distance.value_or(0.0)},
                 {"base_length", inst.params.base_length},
                 {"perturbation", inst.perturbation},
                 {"seed", inst.seed}};
  const ClaimAngles& a = inst.angles;
  j["angles"] = {{"omega", a.omega}, {"theta", a.theta}, {"theta_prime", a.theta_prime}, {"phi", a.phi},
                 {"psi", a.psi},     {"alpha", a.alpha}, {"beta", a.beta},               {"theta_psi_gap", a.theta_psi_gap}};
  return j.dump(1) + "\n";
}

std::string trace_to_json(const std::vector<TraceEntry>& trace) {
  ojson j = ojson::array();
  for (const TraceEntry& e : trace) {
    j.push_back({{"insert", {e.u, e.v}},
                 {"crossings", e.crossings},
                 {"measure_before", e.measure_before},
                 {"measure_after", e.measure_after}});
  }
  return j.dump(1) + "\n";
}

namespace {

ojson report_json(const PropositionReport& r) {
  ojson improving = ojson::array();
  for (const auto& [a, b] : r.improving_insertions) improving.push_back({a, b});
  return ojson{{"n", r.n},
               {"vertex_count", r.vertex_count},
               {"triangle_count", r.triangle_count},
               {"edge_count", r.edge_count},
               {"expected_edge_count", r.expected_edge_count},
               {"diameter", r.diameter},
               {"expected_diameter", r.expected_diameter},
               {"op_crossings", r.op_crossings},
               {"expected_op_crossings", r.expected_op_crossings},
               {"op_distance", r.op_distance},
               {"improving_insertions", improving},
               {"insertions_tested", r.insertions_tested},
               {"insertions_skipped", r.insertions_skipped},
               {"flip_improvements", r.flip_improvements},
               {"claim_margins",
                {{"omega_minus_phi", r.claim_margins.omega_minus_phi},
                 {"psi_minus_omega", r.claim_margins.psi_minus_omega},
                 {"omega_minus_alpha", r.claim_margins.omega_minus_alpha},
                 {"omega_minus_beta", r.claim_margins.omega_minus_beta}}},
               {"perturbation", r.perturbation},
               {"verdict", r.verdict}};
}

}  // namespace

std::string report_to_json(const PropositionReport& report) { return report_json(report).dump(1) + "\n"; }

std::string reports_to_json(const std::vector<PropositionReport>& reports) {
  ojson j = ojson::array();
  for (const auto& r : reports) j.push_back(report_json(r));
  return j.dump(1) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file_atomic(const std::string& path, std::string_view content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidInput("cannot write " + tmp);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw InvalidInput("failed writing " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace manta
