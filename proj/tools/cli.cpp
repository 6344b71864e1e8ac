#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "homcode/analysis.hpp"
#include "homcode/boundary.hpp"
#include "homcode/error.hpp"
#include "homcode/homology.hpp"
#include "homcode/hsc.hpp"
#include "homcode/io.hpp"
#include "homcode/lattices.hpp"
#include "homcode/punctures.hpp"
#include "homcode/stabilizer.hpp"
#include "homcode/transforms.hpp"
#include "json.hpp"

namespace homcode::cli {

namespace {

using nlohmann::json;

struct Io {
  std::string input_path;   // empty: read the stream
  std::string output_path;  // empty: write the stream
  std::istream* in = nullptr;
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;

  std::string slurp() const {
    if (input_path.empty()) {
      std::ostringstream buffer;
      buffer << in->rdbuf();
      return buffer.str();
    }
    std::ifstream file(input_path, std::ios::binary);
    if (!file) throw Error(ErrorKind::IoError, "cannot open input \"" + input_path + "\"");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
  }

  void emit(const std::string& payload) const {
    if (output_path.empty()) {
      *out << payload;
      return;
    }
    std::ofstream file(output_path, std::ios::binary);
    if (!file) throw Error(ErrorKind::IoError, "cannot open output \"" + output_path + "\"");
    file << payload;
  }
};

json detail_json(const std::string& detail) {
  if (detail.empty()) return nullptr;
  try {
    return json::parse(detail);
  } catch (const json::parse_error&) {
    return detail;
  }
}

json rational_json(const Rational& r) {
  return json{{"exact", r.to_string()}, {"value", r.to_double()}};
}

json params_json(const CodeParams& params) {
  json j{{"n", params.n},
         {"k", params.k},
         {"s_given", params.s_given},
         {"s_independent", params.s_independent},
         {"redundancies", params.redundancies}};
  if (params.d) j["d"] = *params.d;
  return j;
}

std::string dump(const json& j) { return j.dump() + "\n"; }

std::vector<int> parse_int_csv(const std::string& text, const char* what) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string piece = text.substr(start, comma == std::string::npos ? comma : comma - start);
    try {
      std::size_t used = 0;
      int value = std::stoi(piece, &used);
      if (used != piece.size()) throw std::invalid_argument(piece);
      out.push_back(value);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError,
                  std::string(what) + " expects comma-separated integers, got \"" + piece +
                      "\"");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subcommand bodies.  Each returns the exit code.

int cmd_gen(const Io& io, const std::string& spec) {
  CombinatorialMap map = generate(spec);
  io.emit(write_map(map));
  *io.err << "generated " << spec << ": V=" << map.vertex_count() << " E=" << map.edge_count()
          << " F=" << map.face_count() << "\n";
  return 0;
}

int cmd_transform(const Io& io, const std::string& kind) {
  CombinatorialMap map = read_map(io.slurp());
  if (kind == "dual") {
    CombinatorialMap out = dual(map);
    io.emit(write_map(out));
    *io.err << "dual: V=" << out.vertex_count() << " E=" << out.edge_count()
            << " F=" << out.face_count() << "\n";
    return 0;
  }
  MedialResult result = medial(map);
  std::size_t cycle_faces = 0;
  for (const MedialFaceOrigin& origin : result.provenance)
    if (origin.kind == MedialFaceOrigin::Kind::CycleFromFace) ++cycle_faces;
  io.emit(write_map(result.map));
  *io.err << "medial: V=" << result.map.vertex_count() << " E=" << result.map.edge_count()
          << " F=" << result.map.face_count() << " (cycle faces " << cycle_faces
          << ", cut faces " << (result.provenance.size() - cycle_faces) << ")\n";
  return 0;
}

int cmd_color(const Io& io, std::size_t palette) {
  CombinatorialMap map = read_map(io.slurp());
  FaceColoring coloring = face_coloring(map, palette);
  io.emit(dump(json{{"palette", coloring.palette}, {"colors", coloring.color_of_face}}));
  *io.err << "colored " << map.face_count() << " faces with palette " << palette << "\n";
  return 0;
}

int cmd_homology(const Io& io) {
  CombinatorialMap map = read_map(io.slurp());
  CycleCutSpaces spaces = cycle_cut_spaces(map);
  EulerGenus eg = euler_genus(map);
  json j{{"V", map.vertex_count()},     {"E", map.edge_count()},
         {"F", map.face_count()},       {"chi", eg.chi},
         {"genus", eg.genus},           {"b1", spaces.b1},
         {"cycle_dim", spaces.cycles.dimension()}, {"cut_dim", spaces.cuts.dimension()},
         {"facial_rank", spaces.facial_rank}};
  io.emit(dump(j));
  *io.err << "homology: genus " << eg.genus << ", b1 " << spaces.b1 << "\n";
  return 0;
}

int cmd_check(const Io& io) {
  HscCode code = read_code(io.slurp());
  AdmissibilityResult result = check_admissibility(code.map, code.faces);
  if (!result.admissible()) {
    const Rejection& rejection = *result.rejection;
    io.emit(dump(json{{"admissible", false},
                      {"rejected", rejection.rule},
                      {"message", rejection.message},
                      {"witness", detail_json(rejection.witness)}}));
    *io.err << "rejected by rule " << rejection.rule << ": " << rejection.message << "\n";
    return 1;
  }
  CodeParams params = stabilizer_params(code_generators(*result.code),
                                        result.code->qubit_count());
  // The checker works from the bare letter assignment; keep the input's own
  // family label when it supplies a more specific one.
  std::string family = result.code->family;
  if (family == "custom" && code.family != "custom") family = code.family;
  io.emit(dump(json{{"admissible", true},
                    {"family", family},
                    {"params", params_json(params)}}));
  *io.err << "admissible " << result.code->family << " [[" << params.n << "," << params.k
          << "]]\n";
  return 0;
}

int cmd_build(const Io& io, const std::string& target) {
  CombinatorialMap map = read_map(io.slurp());
  HscCode code;
  if (target == "ktc") {
    code = build_ktc(map);
  } else if (target.rfind("tcc:", 0) == 0) {
    int cls = 0;
    try {
      cls = std::stoi(target.substr(4));
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "build target tcc:CLASS needs an integer class");
    }
    code = build_tcc(map, cls);
  } else {
    throw Error(ErrorKind::ParseError,
                "unknown build target \"" + target + "\" (expected ktc or tcc:CLASS)");
  }
  io.emit(write_code(code));
  *io.err << "built " << code.family << " code on " << code.qubit_count() << " qubits\n";
  return 0;
}

int cmd_params(const Io& io, long long cap, bool cap_given) {
  HscCode code = read_code(io.slurp());
  std::vector<PauliWord> gens = code_generators(code);
  CodeParams params = stabilizer_params(gens, code.qubit_count());
  json j = params_json(params);
  if (cap_given) {
    if (params.k == 0) {
      j["d"] = nullptr;
      j["d_note"] = "no logical qubits";
    } else {
      DistanceResult result = min_distance(gens, std::size_t(cap));
      j["distance_cap"] = result.cap;
      if (result.distance) {
        j["d"] = *result.distance;
        if (result.witness) j["d_witness"] = result.witness->to_string();
      } else {
        j["d"] = nullptr;
        j["d_note"] = "above cap";
      }
    }
  }
  io.emit(dump(j));
  *io.err << "params [[" << params.n << "," << params.k;
  if (j.contains("d") && !j["d"].is_null()) *io.err << "," << j["d"].get<std::size_t>();
  *io.err << "]]\n";
  return 0;
}

int cmd_punch(const Io& io, const std::vector<std::string>& at_specs) {
  HscCode code = read_code(io.slurp());
  PuncturedCode punctured;
  bool first = true;
  for (const std::string& at : at_specs) {
    std::size_t colon = at.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 >= at.size())
      throw Error(ErrorKind::ParseError, "--at expects FACE:SLOT[,SLOT...], got \"" + at + "\"");
    std::size_t face = 0;
    try {
      face = std::stoul(at.substr(0, colon));
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "--at face must be an integer, got \"" + at + "\"");
    }
    std::vector<int> slot_ints = parse_int_csv(at.substr(colon + 1), "--at slots");
    std::vector<std::size_t> slots;
    for (int s : slot_ints) {
      if (s < 0) throw Error(ErrorKind::ParseError, "--at slots must be non-negative");
      slots.push_back(std::size_t(s));
    }
    punctured = first ? puncture(code, face, slots) : puncture(punctured, face, slots);
    first = false;
  }
  if (first) throw Error(ErrorKind::ParseError, "punch needs at least one --at FACE:SLOTS");
  HoleCounts counts = hole_logical_count(punctured);
  json j{{"holes", counts.holes},
         {"logicals", counts.logicals},
         {"formula_total", counts.formula_total},
         {"k_base", counts.k_base},
         {"k_punctured", counts.k_punctured},
         {"delta_k", counts.delta_k},
         {"formula_vs_rank", counts.formula_total == counts.delta_k ? "agree" : "disagree"}};
  io.emit(dump(j));
  *io.err << "punched " << punctured.removed.size() << " generators: delta_k="
          << counts.delta_k << "\n";
  return 0;
}

int cmd_boundary(const Io& io, const std::string& family, const std::string& seq_text,
                 std::size_t size_a, bool size_a_given, std::size_t size_b, bool emit_code) {
  std::vector<int> seq = parse_int_csv(seq_text, "--seq");
  std::size_t a = size_a;
  if (!size_a_given && family == "TCC" && !seq.empty() && seq.size() % 3 == 0)
    a = seq.size() / 3;
  BoundaryPatch patch = build_boundary_patch(family, seq, a, size_b);
  BoundaryCount count = boundary_logical_count(patch);
  if (emit_code) {
    io.emit(write_code(patch.code));
  } else {
    json j{{"family", patch.family},
           {"n", patch.code.qubit_count()},
           {"k", count.k},
           {"from_vertex_formula", count.from_vertex_formula},
           {"from_boundary_formula", count.from_boundary_formula},
           {"from_rank", count.from_rank},
           {"formula_vs_rank", "agree"},
           {"two_valent", patch.two_valent_count},
           {"three_valent", patch.three_valent_count},
           {"boundary_runs", patch.boundary_runs},
           {"outer_face", patch.outer_face}};
    io.emit(dump(j));
  }
  *io.err << family << " patch: n=" << patch.code.qubit_count() << " k=" << count.k << "\n";
  return 0;
}

int cmd_density(const Io& io, const std::string& policy_name) {
  DensityPolicy policy;
  if (policy_name == "max_admissible")
    policy = DensityPolicy::kMaxAdmissible;
  else if (policy_name == "uniform_one")
    policy = DensityPolicy::kUniformOne;
  else
    throw Error(ErrorKind::ParseError,
                "--policy expects max_admissible or uniform_one, got \"" + policy_name + "\"");
  CombinatorialMap map = read_map(io.slurp());
  DensityReport report = density_analysis(map, policy);
  EulerGenus eg = euler_genus(map);
  auto meta = map.meta();
  json j{{"family", meta.count("family") ? meta.at("family") : "custom"},
         {"genus", eg.genus},
         {"V", map.vertex_count()},
         {"E", map.edge_count()},
         {"F", map.face_count()},
         {"policy", policy_name},
         {"F_avg", rational_json(report.f_avg)},
         {"m_max", report.m_max},
         {"m_required", rational_json(report.m_required)},
         {"density", rational_json(report.density)},
         {"verdict", report.verdict}};
  if (report.f_avg_formula_applicable) j["F_avg_formula"] = rational_json(report.f_avg_formula);
  if (report.appendix_applicable) {
    j["appendix_density"] = rational_json(report.appendix_density);
    j["c"] = rational_json(report.c);
  }
  io.emit(dump(j));
  *io.err << "density " << report.density.to_string() << " (" << report.verdict << ")\n";
  return 0;
}

int cmd_favg(const Io& io, std::size_t valence, std::size_t genus, std::size_t vertices) {
  FavgResult result = favg_analysis(valence, genus, vertices);
  json j{{"valence", valence},
         {"genus", genus},
         {"vertices", vertices},
         {"F_avg", rational_json(result.value)},
         {"asymptote", result.asymptote}};
  io.emit(dump(j));
  *io.err << "F_avg = " << result.value.to_string() << "\n";
  return 0;
}

int cmd_classify(const Io& io) {
  CombinatorialMap map = read_map(io.slurp());
  Classification result = classify(map);
  json j{{"family", result.family}, {"classes", result.classes}};
  if (result.params) j["params"] = params_json(*result.params);
  if (!result.reason.empty()) j["reason"] = result.reason;
  if (!result.witness.empty()) j["witness"] = detail_json(result.witness);
  io.emit(dump(j));
  if (result.family == "Inadmissible") {
    *io.err << "inadmissible: " << result.reason << "\n";
    return 1;
  }
  *io.err << "classified " << result.family;
  if (!result.classes.empty()) {
    *io.err << " classes=[";
    for (std::size_t i = 0; i < result.classes.size(); ++i)
      *io.err << (i ? "," : "") << result.classes[i];
    *io.err << "]";
  }
  *io.err << "\n";
  return 0;
}

int cmd_export_dot(const Io& io, long long palette) {
  std::string text = io.slurp();
  CombinatorialMap map;
  std::optional<FaceColoring> coloring;
  if (looks_like_code(text)) {
    HscCode code = read_code(text);
    map = code.map;
    coloring = code.coloring;
  } else {
    map = read_map(text);
  }
  if (palette > 0) coloring = face_coloring(map, std::size_t(palette));
  io.emit(export_dot(map, coloring ? &*coloring : nullptr));
  *io.err << "dot: " << map.vertex_count() << " vertices, " << map.edge_count() << " edges\n";
  return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"homological stabilizer code toolkit"};
  app.footer("Input/output are JSON documents (DOT text for export-dot).\n"
             "HOMCODE_SEED is reserved for future randomized features; all current\n"
             "commands are deterministic and ignore it.");
  app.require_subcommand(1);

  Io io;
  io.in = &in;
  io.out = &out;
  io.err = &err;

  std::string gen_spec;
  auto* gen = app.add_subcommand("gen", "generate a lattice map (family:key=val,...)");
  gen->add_option("spec", gen_spec, "lattice spec, e.g. square_torus:L=4")->required();

  std::string transform_kind;
  auto* transform = app.add_subcommand("transform", "dual or medial of a map");
  transform->add_option("kind", transform_kind, "dual | medial")
      ->required()
      ->check(CLI::IsMember({"dual", "medial"}));

  long long palette = 0;
  auto* color = app.add_subcommand("color", "proper face coloring");
  color->add_option("--palette", palette, "2 (4-valent) or 3 (3-valent)")->required();

  auto* homology = app.add_subcommand("homology", "cycle/cut space dimensions and genus");

  auto* check = app.add_subcommand("check", "admissibility of a code JSON");

  std::string build_target;
  auto* build = app.add_subcommand("build", "construct a code on a map");
  build->add_option("target", build_target, "ktc | tcc:CLASS")->required();

  long long distance_cap = 0;
  auto* params = app.add_subcommand("params", "stabilizer parameters of a code JSON");
  auto* cap_opt =
      params->add_option("--distance-cap", distance_cap, "exhaustive distance search cap");

  std::vector<std::string> at_specs;
  auto* punch = app.add_subcommand("punch", "remove face generators (punctures)");
  punch->add_option("--at", at_specs, "FACE:SLOT[,SLOT...]; repeatable")->required();

  std::string bfamily, bseq;
  long long bsize_a = 1, bsize_b = 1;
  bool emit_code = false;
  auto* boundary = app.add_subcommand("boundary", "build a planar boundary patch");
  boundary->add_option("--family", bfamily, "KTC | TCC")
      ->required()
      ->check(CLI::IsMember({"KTC", "TCC"}));
  boundary->add_option("--seq", bseq, "boundary colors, e.g. 0,1,0,1")->required();
  auto* size_a_opt = boundary->add_option("--size-a", bsize_a, "width / triangle side");
  boundary->add_option("--size-b", bsize_b, "height (KTC rectangles)");
  boundary->add_flag("--emit-code", emit_code, "print the patch code JSON instead of the report");

  std::string policy = "max_admissible";
  auto* density = app.add_subcommand("density", "logical operator density analysis");
  density->add_option("--policy", policy, "max_admissible | uniform_one");

  long long favg_valence = 0, favg_genus = 0, favg_vertices = 0;
  auto* favg = app.add_subcommand("favg", "exact average face size of a closed surface family");
  favg->add_option("--valence", favg_valence, "3 or 4")->required();
  favg->add_option("--genus", favg_genus, "surface genus")->required();
  favg->add_option("--vertices", favg_vertices, "vertex count")->required();

  auto* classify_cmd = app.add_subcommand("classify", "decide the code family of a map");

  long long dot_palette = 0;
  auto* export_dot_cmd = app.add_subcommand("export-dot", "Graphviz text for a map or code");
  export_dot_cmd->add_option("--palette", dot_palette, "color faces first (2 or 3)");

  for (auto* sub : {gen, transform, color, homology, check, build, params, punch, boundary,
                    density, favg, classify_cmd, export_dot_cmd}) {
    sub->add_option("-i,--input", io.input_path, "input path (default: standard input)");
    sub->add_option("-o,--output", io.output_path, "output path (default: standard output)");
  }

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return cmd_gen(io, gen_spec);
    if (transform->parsed()) return cmd_transform(io, transform_kind);
    if (color->parsed()) return cmd_color(io, std::size_t(palette));
    if (homology->parsed()) return cmd_homology(io);
    if (check->parsed()) return cmd_check(io);
    if (build->parsed()) return cmd_build(io, build_target);
    if (params->parsed()) return cmd_params(io, distance_cap, cap_opt->count() > 0);
    if (punch->parsed()) return cmd_punch(io, at_specs);
    if (boundary->parsed())
      return cmd_boundary(io, bfamily, bseq, std::size_t(bsize_a), size_a_opt->count() > 0,
                          std::size_t(bsize_b), emit_code);
    if (density->parsed()) return cmd_density(io, policy);
    if (favg->parsed())
      return cmd_favg(io, std::size_t(favg_valence), std::size_t(favg_genus),
                      std::size_t(favg_vertices));
    if (classify_cmd->parsed()) return cmd_classify(io);
    if (export_dot_cmd->parsed()) return cmd_export_dot(io, dot_palette);
    err << "no subcommand\n";
    return 2;
  } catch (const Error& e) {
    // what() carries a "Kind: " prefix for log lines; the JSON field keeps
    // the bare message since the kind is already its own key.
    std::string message = e.what();
    std::string prefix = std::string(to_string(e.kind())) + ": ";
    if (message.rfind(prefix, 0) == 0) message = message.substr(prefix.size());
    json j{{"error", to_string(e.kind())},
           {"message", message},
           {"detail", detail_json(e.detail())}};
    out << dump(j);
    err << e.what() << "\n";
    bool io_class = e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::IoError ||
                    e.kind() == ErrorKind::ValidationError;
    return io_class ? 2 : 1;
  }
}

}  // namespace homcode::cli
