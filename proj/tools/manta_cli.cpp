// manta: generate, optimize, verify and render min-max angle triangulations.
//
// Exit codes: 0 success, 1 usage, 2 generation or claim failure,
// 3 invalid input, 4 verification failure.

#include "cli_args.hpp"
#include "manta/edge_insertion.hpp"
#include "manta/errors.hpp"
#include "manta/io.hpp"
#include "manta/manta_ray.hpp"
#include "manta/oracle.hpp"
#include "manta/svg.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace manta;

constexpr int kExitUsage = 1;
constexpr int kExitGeneration = 2;
constexpr int kExitInvalidInput = 3;
constexpr int kExitVerification = 4;

struct Common {
  std::string out;
  std::string format = "text";
  double tie_tol = kDefaultTieTol;
  std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--out", c.out, "Output path");
  cmd->add_option("--format", c.format, "Console output format")->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--tie-tol", c.tie_tol, "Tolerance (rad) for equal measures")->check(CLI::NonNegativeNumber);
  cmd->add_option("--seed", c.seed, "Seed for randomized steps");
}

std::string degrees(double rad) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f rad (%.6f deg)", rad, rad * 180.0 / kPi);
  return buf;
}

struct Loaded {
  Triangulation triangulation;
  Labels labels;
  bool from_points = false;
};

// Triangulation JSON, or a points file triangulated by the sweep.
Loaded load_input(const std::string& path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    auto doc = parse_triangulation_json(text);
    return {build_triangulation(PointSet(std::move(doc.points)), std::move(doc.triangles)), std::move(doc.labels),
            false};
  }
  return {arbitrary_triangulation(PointSet(parse_points(text))), {}, true};
}

std::string label_of(const Labels& labels, VertexId id) {
  for (const auto& [name, v] : labels) {
    if (v == id) return name;
  }
  return std::to_string(id);
}

VertexId resolve_vertex(const Labels& labels, const std::string& token) {
  for (const auto& [name, v] : labels) {
    if (name == token) return v;
  }
  try {
    std::size_t used = 0;
    const int id = std::stoi(token, &used);
    if (used == token.size()) return id;
  } catch (const std::exception&) {
  }
  throw InvalidInput("unknown vertex '" + token + "'");
}

void emit(const Common& c, const std::string& json) {
  if (!c.out.empty()) write_file_atomic(c.out, json);
}

// ---- generate ------------------------------------------------------------

struct GenerateArgs {
  Common common;
  int n = 1;
  std::string omega = "0.78pi";
  std::string theta = "auto";
  std::string p_distance = "auto";
  double base = 1.0;
};

int run_generate(const GenerateArgs& a) {
  MantaRayParams params;
  params.n = a.n;
  params.base_length = a.base;
  try {
    params.omega = cli::parse_angle(a.omega);
    params.theta = cli::parse_optional_angle(a.theta);
    if (a.p_distance != "auto") params.p_distance = std::stod(a.p_distance);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  try {
    const MantaRayInstance inst = generate(params);
    const std::string json = instance_to_json(inst);
    emit(a.common, json);
    if (a.common.format == "json") {
      std::cout << json;
    } else {
      std::cout << "n=" << inst.n() << " vertices=" << inst.triangulation.vertex_count()
                << " edges=" << inst.triangulation.edges().size()
                << " triangles=" << inst.triangulation.triangles().size() << "\n"
                << "omega=" << degrees(inst.angles.omega) << "\n"
                << "theta=" << degrees(*inst.params.theta) << "\n"
                << "p_distance=" << *inst.params.p_distance << "\n";
    }
    return 0;
  } catch (const Error& e) {
    std::cerr << "generation failed: " << e.what() << "\n";
    return kExitGeneration;
  }
}

// ---- optimize ------------------------------------------------------------

struct OptimizeArgs {
  Common common;
  std::string input;
  std::string trace_out;
  bool parallel = false;
  unsigned threads = 0;
  std::string order = "lex";
  std::size_t max_rounds = 0;
};

int run_optimize(const OptimizeArgs& a) {
  std::optional<Loaded> in;
  try {
    in = load_input(a.input);
  } catch (const Error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  AlgorithmOptions options;
  options.tie_tol = a.common.tie_tol;
  options.max_rounds = a.max_rounds;
  options.mode = a.parallel ? ScanMode::Parallel : ScanMode::Sequential;
  options.threads = a.threads;
  options.order = a.order == "reverse" ? ScanOrder::ReverseLexicographic : ScanOrder::Lexicographic;

  const double before = measure(in->triangulation, options.tie_tol).max_angle;
  const AlgorithmResult result = edge_insertion_algorithm(in->triangulation, options);
  const double after = measure(result.final, options.tie_tol).max_angle;

  emit(a.common, triangulation_to_json(result.final, in->labels));
  const std::string trace = trace_to_json(result.trace);
  if (!a.trace_out.empty()) write_file_atomic(a.trace_out, trace);

  if (a.common.format == "json") {
    std::cout << trace;
  } else {
    std::cout << "measure before: " << degrees(before) << "\n";
    for (const TraceEntry& e : result.trace) {
      std::cout << "  insert " << label_of(in->labels, e.u) << "-" << label_of(in->labels, e.v)
                << " crossings=" << e.crossings << " measure " << degrees(e.measure_before) << " -> "
                << degrees(e.measure_after) << "\n";
    }
    std::cout << "measure after:  " << degrees(after) << "\n"
              << "insertions accepted: " << result.trace.size() << "\n";
  }
  return 0;
}

// ---- verify --------------------------------------------------------------

struct VerifyArgs {
  Common common;
  std::string range = "1..10";
  std::string omega = "0.78pi";
  std::string theta = "auto";
  double perturb = 0.0;
};

int run_verify(const VerifyArgs& a) {
  std::pair<int, int> range;
  MantaRayParams params;
  try {
    range = cli::parse_range(a.range);
    params.omega = cli::parse_angle(a.omega);
    params.theta = cli::parse_optional_angle(a.theta);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::vector<PropositionReport> reports;
  try {
    for (int n = range.first; n <= range.second; ++n) {
      params.n = n;
      MantaRayInstance inst = generate(params);
      if (a.perturb > 0.0) inst = perturb_general_position(inst, a.perturb, a.common.seed, a.common.tie_tol);
      reports.push_back(verify_proposition(inst, a.common.tie_tol));
    }
  } catch (const PerturbationBreaksClaim& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kExitVerification;
  } catch (const Error& e) {
    std::cerr << "generation failed: " << e.what() << "\n";
    return kExitGeneration;
  }

  const std::string json = reports_to_json(reports);
  emit(a.common, json);
  bool all = true;
  if (a.common.format == "json") {
    std::cout << json;
    for (const auto& r : reports) all = all && r.verdict;
  } else {
    std::printf("%4s %6s %6s %6s %6s %10s %12s %12s  %s\n", "n", "edges", "diam", "d(OP)", "cross", "improving",
                "min-margin", "tested", "verdict");
    for (const auto& r : reports) {
      const auto& m = r.claim_margins;
      const double least = std::min({m.omega_minus_phi, m.psi_minus_omega, m.omega_minus_alpha, m.omega_minus_beta});
      std::string improving;
      for (const auto& [u, v] : r.improving_insertions) improving += (improving.empty() ? "" : ",") + u + v;
      if (improving.empty()) improving = "-";
      std::printf("%4d %6zu %6zu %6zu %6zu %10s %12.6e %12zu  %s\n", r.n, r.edge_count, r.diameter, r.op_distance,
                  r.op_crossings, improving.c_str(), least, r.insertions_tested, r.verdict ? "ok" : "FAIL");
      all = all && r.verdict;
    }
  }
  return all ? 0 : kExitVerification;
}

// ---- oracle --------------------------------------------------------------

struct OracleArgs {
  Common common;
  std::string input;
  std::size_t cap = kDefaultOracleCap;
};

int run_oracle(const OracleArgs& a) {
  try {
    const Loaded in = load_input(a.input);
    const auto all = enumerate_triangulations(in.triangulation.point_set(), a.cap);
    const Triangulation best = optimum_of(all, a.common.tie_tol);
    const std::string json = triangulation_to_json(best, in.labels);
    emit(a.common, json);
    if (a.common.format == "json") {
      std::cout << json;
    } else {
      std::cout << "triangulations: " << all.size() << "\n"
                << "optimum measure: " << degrees(measure(best, a.common.tie_tol).max_angle) << "\n";
    }
    return 0;
  } catch (const Error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  }
}

// ---- render --------------------------------------------------------------

struct RenderArgs {
  Common common;
  std::string input;
  std::string highlight;
  bool labels = false;
  bool shade = false;
  double width = 800.0;
};

int run_render(const RenderArgs& a) {
  if (a.common.out.empty()) {
    std::cerr << "error: --out is required\n";
    return kExitUsage;
  }
  try {
    const Loaded in = load_input(a.input);
    SvgOptions options;
    options.width_px = a.width;
    options.shade_channel = a.shade;
    if (a.labels) {
      options.labels.resize(in.triangulation.vertex_count());
      for (VertexId v = 0; v < static_cast<VertexId>(options.labels.size()); ++v) {
        options.labels[static_cast<std::size_t>(v)] = label_of(in.labels, v);
      }
    }
    if (!a.highlight.empty()) {
      const auto comma = a.highlight.find(',');
      if (comma == std::string::npos) throw InvalidInput("--highlight expects U,V");
      options.highlight = Edge(resolve_vertex(in.labels, a.highlight.substr(0, comma)),
                               resolve_vertex(in.labels, a.highlight.substr(comma + 1)));
    }
    write_file_atomic(a.common.out, render_svg(in.triangulation, options));
    return 0;
  } catch (const Error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge-insertion min-max angle triangulation toolkit"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate_cmd = app.add_subcommand("generate", "Generate a manta ray instance");
  add_common(generate_cmd, gen.common);
  generate_cmd->add_option("--n", gen.n, "Strip length")->check(CLI::Range(0, kMaxStripLength));
  generate_cmd->add_option("--omega", gen.omega, "Apex angle, e.g. 0.78pi or radians");
  generate_cmd->add_option("--theta", gen.theta, "Ray angle or 'auto'");
  generate_cmd->add_option("--p-distance", gen.p_distance, "Height of P above A_nB_n or 'auto'");
  generate_cmd->add_option("--base", gen.base, "Length of AB")->check(CLI::PositiveNumber);

  OptimizeArgs opt;
  auto* optimize_cmd = app.add_subcommand("optimize", "Run the edge insertion algorithm");
  add_common(optimize_cmd, opt.common);
  optimize_cmd->add_option("input", opt.input, "Triangulation JSON or points file")->required();
  optimize_cmd->add_option("--trace", opt.trace_out, "Write the trace JSON here");
  optimize_cmd->add_flag("--parallel", opt.parallel, "Evaluate candidates concurrently");
  optimize_cmd->add_option("--threads", opt.threads, "Worker threads for --parallel");
  optimize_cmd->add_option("--order", opt.order, "Candidate scan order")->check(CLI::IsMember({"lex", "reverse"}));
  optimize_cmd->add_option("--max-rounds", opt.max_rounds, "Insertion limit (0 = 10 x edges)");

  VerifyArgs ver;
  auto* verify_cmd = app.add_subcommand("verify", "Check the non-locality statement on T_n");
  add_common(verify_cmd, ver.common);
  verify_cmd->add_option("--n", ver.range, "Strip length or range lo..hi");
  verify_cmd->add_option("--omega", ver.omega, "Apex angle");
  verify_cmd->add_option("--theta", ver.theta, "Ray angle or 'auto'");
  verify_cmd->add_option("--perturb", ver.perturb, "General-position perturbation size")->check(CLI::NonNegativeNumber);

  OracleArgs orc;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force optimum of a small point set");
  add_common(oracle_cmd, orc.common);
  oracle_cmd->add_option("input", orc.input, "Triangulation JSON or points file")->required();
  oracle_cmd->add_option("--cap", orc.cap, "Maximum number of triangulations");

  RenderArgs ren;
  auto* render_cmd = app.add_subcommand("render", "Render a triangulation as SVG");
  add_common(render_cmd, ren.common);
  render_cmd->add_option("input", ren.input, "Triangulation JSON or points file")->required();
  render_cmd->add_option("--highlight", ren.highlight, "Inserted edge U,V (labels or ids)");
  render_cmd->add_flag("--labels", ren.labels, "Draw vertex labels");
  render_cmd->add_flag("--shade", ren.shade, "Shade the channel of the highlighted edge");
  render_cmd->add_option("--width", ren.width, "Width in px")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*generate_cmd) return run_generate(gen);
    if (*optimize_cmd) return run_optimize(opt);
    if (*verify_cmd) return run_verify(ver);
    if (*oracle_cmd) return run_oracle(orc);
    if (*render_cmd) return run_render(ren);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitUsage;
}
