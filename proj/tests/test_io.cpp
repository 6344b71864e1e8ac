// JSON serialization, DOT export, and the command-line front end (both
// in-process and as a spawned binary).

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "homcode/error.hpp"
#include "homcode/hsc.hpp"
#include "homcode/io.hpp"
#include "homcode/lattices.hpp"
#include "homcode/transforms.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace homcode;
using nlohmann::json;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::ValidationError;
}

std::string detail_of(const std::function<void()>& fn, ErrorKind expected) {
  try {
    fn();
  } catch (const Error& e) {
    CHECK(e.kind() == expected);
    return e.detail();
  }
  FAIL("expected an error");
  return {};
}

struct CliResult {
  int rc;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args, const std::string& input = {}) {
  std::istringstream in(input);
  std::ostringstream out, err;
  int rc = cli::run(std::move(args), in, out, err);
  return {rc, out.str(), err.str()};
}

// stdout and exit code of the installed binary, stderr discarded
std::pair<int, std::string> run_bin(const std::string& shell_tail) {
  std::string cmd = std::string("'") + HOMCODE_BIN_PATH + "' " + shell_tail + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

const char* kSt2MapJson =
    R"({"alpha":[6,11,4,9,2,15,0,13,14,3,12,1,10,7,8,5],"darts":16,)"
    R"("meta":{"L":"2","family":"square_torus"},)"
    R"("sigma":[1,2,3,0,5,6,7,4,9,10,11,8,13,14,15,12]})"
    "\n";

}  // namespace

TEST_CASE("maps serialize to one sorted JSON line and read back exactly") {
  CombinatorialMap st2 = generate("square_torus:L=2");
  CHECK(write_map(st2) == kSt2MapJson);

  for (const char* spec : {"square_torus:L=2", "square_torus:L=4", "hex_torus:a=3,b=3",
                           "torus_488:a=2,b=2"}) {
    CAPTURE(spec);
    CombinatorialMap m = generate(spec);
    CombinatorialMap back = read_map(write_map(m));
    CHECK(back.alpha_perm() == m.alpha_perm());
    CHECK(back.sigma_perm() == m.sigma_perm());
    CHECK(back.meta() == m.meta());
    CHECK(write_map(back) == write_map(m));
  }
}

TEST_CASE("codes serialize with faces, family, coloring and class") {
  Classification poly = classify(test::polygon_cycle(4));
  CHECK(write_code(*poly.code) ==
        R"({"alpha":[1,0,3,2,5,4,7,6],"darts":8,)"
        R"("faces":[{"face":0,"gens":["XXXX","ZZZZ"]}],"family":"Polygon",)"
        R"("meta":{},"sigma":[7,2,1,4,3,6,5,0]})"
        "\n");

  HscCode ktc = build_ktc(generate("square_torus:L=4"));
  HscCode ktc_back = read_code(write_code(ktc));
  CHECK(ktc_back.family == "KTC");
  REQUIRE(ktc_back.coloring.has_value());
  CHECK(ktc_back.coloring->palette == 2);
  CHECK(ktc_back.coloring->color_of_face == ktc.coloring->color_of_face);
  CHECK(write_code(ktc_back) == write_code(ktc));

  HscCode tcc2 = build_tcc(generate("hex_torus:a=3,b=3"), 2);
  HscCode tcc_back = read_code(write_code(tcc2));
  CHECK(tcc_back.family == "TCC");
  CHECK(tcc_back.tcc_class == 2);
  CHECK(write_code(tcc_back) == write_code(tcc2));
}

TEST_CASE("malformed documents name the missing or invalid piece") {
  CHECK(kind_of([] { read_map("not json"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { read_map(R"({"alpha":[1,0],"darts":2})"); }) == ErrorKind::ParseError);
  CHECK(detail_of([] {
          read_map(R"({"alpha":[9,0,3,2,5,4,7,6],"darts":8,"sigma":[0,1,2,3,4,5,6,7]})");
        },
                  ErrorKind::ValidationError) == R"({"value":9,"darts":8})");
  CHECK(detail_of([] { read_map(R"({"alpha":[0,1],"darts":2,"sigma":[1,0]})"); },
                  ErrorKind::ValidationError) == R"({"dart":0})");
  CHECK(kind_of([] {
          read_code(R"({"alpha":[1,0,3,2,5,4,7,6],"darts":8,)"
                    R"("faces":[{"face":0,"gens":"XXXX"}],)"
                    R"("sigma":[7,2,1,4,3,6,5,0]})");
        }) == ErrorKind::ParseError);
  CHECK(detail_of([] {
          read_code(R"({"alpha":[1,0,3,2,5,4,7,6],"darts":8,)"
                    R"("faces":[{"face":0,"gens":["XXX"]}],)"
                    R"("sigma":[7,2,1,4,3,6,5,0]})");
        },
                  ErrorKind::ValidationError) == R"({"face":0,"length":3,"cycle":4})");

  CombinatorialMap st2 = generate("square_torus:L=2");
  CHECK(looks_like_code(write_code(build_ktc(st2))));
  CHECK_FALSE(looks_like_code(write_map(st2)));
}

TEST_CASE("DOT export lists vertices, labeled edges and colored face nodes") {
  CHECK(export_dot(CombinatorialMap::build({}, {}), nullptr) == "graph homcode {\n}\n");
  CHECK(export_dot(CombinatorialMap::build({1, 0}, {0, 1}), nullptr) ==
        "graph homcode {\n"
        "  v0;\n"
        "  v1;\n"
        "  v0 -- v1 [label=\"e0\"];\n"
        "}\n");
  CombinatorialMap st2 = generate("square_torus:L=2");
  FaceColoring coloring = face_coloring(st2, 2);
  CHECK(export_dot(st2, &coloring) ==
        "graph homcode {\n"
        "  v0;\n"
        "  v1;\n"
        "  v2;\n"
        "  v3;\n"
        "  v0 -- v1 [label=\"e0\"];\n"
        "  v0 -- v2 [label=\"e1\"];\n"
        "  v0 -- v1 [label=\"e2\"];\n"
        "  v0 -- v2 [label=\"e3\"];\n"
        "  v1 -- v3 [label=\"e4\"];\n"
        "  v1 -- v3 [label=\"e5\"];\n"
        "  v2 -- v3 [label=\"e6\"];\n"
        "  v2 -- v3 [label=\"e7\"];\n"
        "  f0 [shape=box, style=filled, fillcolor=\"red\", label=\"f0\"];\n"
        "  f1 [shape=box, style=filled, fillcolor=\"green\", label=\"f1\"];\n"
        "  f2 [shape=box, style=filled, fillcolor=\"red\", label=\"f2\"];\n"
        "  f3 [shape=box, style=filled, fillcolor=\"green\", label=\"f3\"];\n"
        "}\n");
}

TEST_CASE("cli: generation, transforms and coloring") {
  CliResult gen = run_cli({"gen", "square_torus:L=2"});
  CHECK(gen.rc == 0);
  CHECK(gen.out == kSt2MapJson);

  CliResult odd = run_cli({"gen", "square_torus:L=5"});
  CHECK(odd.rc == 1);
  CHECK(odd.out ==
        R"json({"detail":{"L":5},"error":"ConstraintViolation",)json"
        R"json("message":"square_torus needs an even L >= 2 (odd tori are not 2-face-colorable)"})json"
        "\n");
  CHECK(odd.err.find("ConstraintViolation") != std::string::npos);

  CliResult bad = run_cli({"gen", "nope:x=1"});
  CHECK(bad.rc == 2);
  CHECK(json::parse(bad.out) ==
        json({{"detail", nullptr},
              {"error", "ParseError"},
              {"message", "unknown lattice family \"nope\""}}));

  CombinatorialMap st4 = generate("square_torus:L=4");
  CliResult dual_out = run_cli({"transform", "dual"}, write_map(st4));
  CHECK(dual_out.rc == 0);
  CHECK(dual_out.out == write_map(dual(st4)));
  CliResult medial_out = run_cli({"transform", "medial"}, write_map(st4));
  CHECK(medial_out.rc == 0);
  CHECK(medial_out.out == write_map(medial(st4).map));
  CHECK(run_cli({"transform", "nope"}, write_map(st4)).rc == 2);

  CliResult color = run_cli({"color", "--palette", "2"}, gen.out);
  CHECK(color.rc == 0);
  CHECK(color.out == R"({"colors":[0,1,0,1],"palette":2})" "\n");

  CliResult dot = run_cli({"export-dot", "--palette", "2"}, gen.out);
  CHECK(dot.rc == 0);
  FaceColoring coloring = face_coloring(generate("square_torus:L=2"), 2);
  CHECK(dot.out == export_dot(generate("square_torus:L=2"), &coloring));
}

TEST_CASE("cli: homology, classification and admissibility") {
  CliResult hex = run_cli({"gen", "hex_torus:a=3,b=3"});
  CliResult hom = run_cli({"homology"}, hex.out);
  CHECK(hom.rc == 0);
  CHECK(hom.out ==
        R"({"E":27,"F":9,"V":18,"b1":2,"chi":0,"cut_dim":17,"cycle_dim":10,)"
        R"("facial_rank":8,"genus":1})"
        "\n");

  CliResult cls = run_cli({"classify"}, hex.out);
  CHECK(cls.rc == 0);
  CHECK(cls.out ==
        R"({"classes":[1,2,3],"family":"TCC","params":{"k":4,"n":18,)"
        R"("redundancies":4,"s_given":18,"s_independent":14}})"
        "\n");

  CliResult mixed = run_cli({"classify"}, run_cli({"gen", "mixed_strip:w=2,h=2"}).out);
  CHECK(mixed.rc == 1);
  CHECK(mixed.out ==
        R"({"classes":[],"family":"Inadmissible","reason":"mixed-valence",)"
        R"("witness":{"valences":[3,4]}})"
        "\n");

  CliResult nodarts = run_cli({"classify"}, R"({"alpha":[1,0],"sigma":[0,1]})");
  CHECK(nodarts.rc == 2);
  CHECK(nodarts.out ==
        R"({"detail":null,"error":"ParseError","message":"missing key \"darts\""})"
        "\n");

  CliResult st2code = run_cli({"build", "ktc"}, run_cli({"gen", "square_torus:L=2"}).out);
  CHECK(st2code.rc == 0);
  CliResult ok = run_cli({"check"}, st2code.out);
  CHECK(ok.rc == 0);
  CHECK(ok.out ==
        R"({"admissible":true,"family":"KTC","params":{"k":2,"n":4,)"
        R"("redundancies":2,"s_given":4,"s_independent":2}})"
        "\n");

  // an all-X assignment fails the two-letter vertex rule
  CombinatorialMap st4 = generate("square_torus:L=4");
  HscCode allx;
  allx.map = st4;
  allx.family = "custom";
  for (std::size_t f = 0; f < st4.face_count(); ++f)
    allx.faces.push_back({f, {std::string(st4.face_length(f), 'X')}});
  CliResult rejected = run_cli({"check"}, write_code(allx));
  CHECK(rejected.rc == 1);
  CHECK(rejected.out ==
        R"({"admissible":false,"message":"a vertex must see at least two letter types",)"
        R"("rejected":"IIA","witness":{"vertex":0}})"
        "\n");
}

TEST_CASE("cli: build, params, punch and boundary") {
  CliResult map4 = run_cli({"gen", "square_torus:L=4"});
  CliResult code4 = run_cli({"build", "ktc"}, map4.out);
  CHECK(code4.rc == 0);
  CliResult params = run_cli({"params", "--distance-cap", "4"}, code4.out);
  CHECK(params.rc == 0);
  CHECK(params.out ==
        R"({"d":4,"d_witness":"XXXXIIIIIIIIIIII","distance_cap":4,"k":2,"n":16,)"
        R"("redundancies":2,"s_given":16,"s_independent":14})"
        "\n");

  CliResult tcc = run_cli({"build", "tcc:2"}, run_cli({"gen", "hex_torus:a=3,b=3"}).out);
  CHECK(tcc.rc == 0);
  CHECK(read_code(tcc.out).tcc_class == 2);
  CHECK(run_cli({"build", "tcc:9"}, run_cli({"gen", "hex_torus:a=3,b=3"}).out).rc == 1);

  CliResult punched = run_cli({"punch", "--at", "1:0"}, code4.out);
  CHECK(punched.rc == 0);
  CHECK(punched.out ==
        R"({"delta_k":0,"formula_total":0,"formula_vs_rank":"agree",)"
        R"("holes":{"green":1},"k_base":2,"k_punctured":2,"logicals":{"green":0}})"
        "\n");

  CliResult patch = run_cli({"boundary", "--family", "KTC", "--seq", "0,1,0,1",
                             "--size-a", "2", "--size-b", "2"});
  CHECK(patch.rc == 0);
  CHECK(patch.out ==
        R"({"boundary_runs":4,"family":"KTC","formula_vs_rank":"agree",)"
        R"("from_boundary_formula":1,"from_rank":1,"from_vertex_formula":1,)"
        R"("k":1,"n":9,"outer_face":0,"three_valent":4,"two_valent":0})"
        "\n");

  // TCC patches infer the side length from the sequence
  CliResult tri = run_cli({"boundary", "--family", "TCC", "--seq", "0,1,2"});
  CHECK(tri.rc == 0);
  CHECK(json::parse(tri.out) == json({{"boundary_runs", 3},
                                      {"family", "TCC"},
                                      {"formula_vs_rank", "agree"},
                                      {"from_boundary_formula", 1},
                                      {"from_rank", 1},
                                      {"from_vertex_formula", 1},
                                      {"k", 1},
                                      {"n", 7},
                                      {"outer_face", 1},
                                      {"three_valent", 4},
                                      {"two_valent", 3}}));

  CliResult emitted = run_cli({"boundary", "--family", "KTC", "--seq", "0,1,0,1",
                               "--size-a", "2", "--size-b", "2", "--emit-code"});
  CHECK(emitted.rc == 0);
  CHECK(looks_like_code(emitted.out));
  CHECK(read_code(emitted.out).map.vertex_count() == 9);
}

TEST_CASE("cli: density and average face size reports") {
  CliResult density = run_cli({"density", "--policy", "max_admissible"},
                              run_cli({"gen", "square_torus:L=4"}).out);
  CHECK(density.rc == 0);
  CHECK(density.out ==
        R"({"E":32,"F":16,"F_avg":{"exact":"4","value":4.0},"V":16,)"
        R"("appendix_density":{"exact":"0","value":0.0},"c":{"exact":"0","value":0.0},)"
        R"("density":{"exact":"0","value":0.0},"family":"square_torus","genus":1,)"
        R"("m_max":[1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1],"m_required":{"exact":"1","value":1.0},)"
        R"("policy":"max_admissible","verdict":"vanishing"})"
        "\n");

  CliResult favg = run_cli({"favg", "--valence", "4", "--genus", "1", "--vertices", "16"});
  CHECK(favg.rc == 0);
  CHECK(favg.out ==
        R"({"F_avg":{"exact":"4","value":4.0},"asymptote":4,"genus":1,"valence":4,)"
        R"("vertices":16})"
        "\n");
}

TEST_CASE("cli: argument and stream failures use exit code 2") {
  CHECK(run_cli({}).rc == 2);
  CliResult help = run_cli({"--help"});
  CHECK(help.rc == 0);
  CHECK(help.out.find("HOMCODE_SEED") != std::string::npos);
  CliResult missing = run_cli({"homology", "-i", "/nonexistent/homcode.json"});
  CHECK(missing.rc == 2);
  CHECK(json::parse(missing.out).at("error") == "IoError");

  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "homcode_io_test";
  fs::create_directories(dir);
  fs::path map_path = dir / "map.json";
  CHECK(run_cli({"gen", "square_torus:L=2", "-o", map_path.string()}).rc == 0);
  std::ifstream in(map_path);
  std::stringstream bytes;
  bytes << in.rdbuf();
  CHECK(bytes.str() == kSt2MapJson);
  CliResult hom = run_cli({"homology", "-i", map_path.string()});
  CHECK(hom.rc == 0);
  CHECK(json::parse(hom.out).at("b1") == 2);
  fs::remove_all(dir);
}

TEST_CASE("the installed binary matches the in-process front end byte for byte") {
  auto [rc_gen, out_gen] = run_bin("gen square_torus:L=2");
  CHECK(rc_gen == 0);
  CHECK(out_gen == kSt2MapJson);

  auto [rc_odd, out_odd] = run_bin("gen square_torus:L=5");
  CHECK(rc_odd == 1);
  CHECK(out_odd == run_cli({"gen", "square_torus:L=5"}).out);

  std::string bin = HOMCODE_BIN_PATH;
  auto [rc_pipe, out_pipe] = run_bin("gen square_torus:L=2 | '" + bin + "' homology");
  CHECK(rc_pipe == 0);
  CHECK(out_pipe == run_cli({"homology"}, run_cli({"gen", "square_torus:L=2"}).out).out);

  auto [rc_none, out_none] = run_bin("");
  CHECK(rc_none == 2);
}
