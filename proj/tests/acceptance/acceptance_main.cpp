// Acceptance gate: one line per criterion, nonzero exit if any fail.

#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "homcode/analysis.hpp"
#include "homcode/boundary.hpp"
#include "homcode/error.hpp"
#include "homcode/homology.hpp"
#include "homcode/hsc.hpp"
#include "homcode/label_set.hpp"
#include "homcode/lattices.hpp"
#include "homcode/map.hpp"
#include "homcode/pauli.hpp"
#include "homcode/punctures.hpp"
#include "homcode/stabilizer.hpp"
#include "homcode/transforms.hpp"
#include "support.hpp"

using namespace homcode;

namespace {

int failures = 0;

#define REQ(cond)            \
  do {                       \
    if (!(cond)) return false; \
  } while (0)

void criterion(int number, const std::string& what, const std::function<bool()>& body) {
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" [threw: ") + e.what() + "]";
  }
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << what << note
            << "\n";
  if (!ok) ++failures;
}

std::vector<std::pair<std::string, CombinatorialMap>> sample_maps() {
  return {{"tetrahedron", test::tetrahedron()},
          {"cube", test::cube()},
          {"octahedron", test::octahedron()},
          {"icosahedron", test::icosahedron()},
          {"square_torus L=4", generate("square_torus:L=4")},
          {"hex_torus 3x3", generate("hex_torus:a=3,b=3")},
          {"torus_488 2x2", generate("torus_488:a=2,b=2")}};
}

bool params_match(const std::vector<PauliWord>& gens, std::size_t n, std::size_t s_ind,
                  std::size_t k, std::size_t d, std::size_t cap) {
  CodeParams p = stabilizer_params(gens, n);
  REQ(p.n == n);
  REQ(p.s_independent == s_ind);
  REQ(p.k == k);
  DistanceResult r = min_distance(gens, cap);
  REQ(r.distance.has_value());
  REQ(*r.distance == d);
  return true;
}

}  // namespace

int main() {
  criterion(1, "map transforms: dual involution, genus, medial 2-coloring on 7 maps", [] {
    for (const auto& [name, m] : sample_maps()) {
      CombinatorialMap dd = dual(dual(m));
      REQ(dd.alpha_perm() == m.alpha_perm());
      REQ(dd.sigma_perm() == m.sigma_perm());
      REQ(euler_genus(dual(m)).genus == euler_genus(m).genus);

      MedialResult md = medial(m);
      REQ(md.map.uniform_valence() == 4);
      REQ(euler_genus(md.map).genus == euler_genus(m).genus);
      FaceColoring fc = face_coloring(md.map, 2);
      std::set<std::size_t> color0, from_faces;
      for (std::size_t f = 0; f < md.map.face_count(); ++f) {
        if (fc.color_of_face[f] == 0) color0.insert(f);
        if (md.provenance[f].kind == MedialFaceOrigin::Kind::CycleFromFace)
          from_faces.insert(f);
      }
      std::set<std::size_t> from_vertices;
      for (std::size_t f = 0; f < md.map.face_count(); ++f)
        if (!from_faces.count(f)) from_vertices.insert(f);
      REQ(color0 == from_faces || color0 == from_vertices);
    }
    return true;
  });

  criterion(2, "homology: b1 by genus, cycle space equals dual cut space on spheres", [] {
    for (const auto& m : {test::tetrahedron(), test::cube(), test::octahedron(),
                          test::icosahedron(), test::triangular_prism()}) {
      CycleCutSpaces s = cycle_cut_spaces(m);
      REQ(s.b1 == 0);
      CombinatorialMap d = dual(m);
      REQ(test::same_subspace(s.cycles, cycle_cut_spaces(d).cuts));
      REQ(test::same_subspace(s.cuts, cycle_cut_spaces(d).cycles));
    }
    for (const char* spec : {"square_torus:L=2", "square_torus:L=4", "hex_torus:a=3,b=3",
                             "torus_488:a=2,b=2"}) {
      REQ(cycle_cut_spaces(generate(spec)).b1 == 2);
    }
    REQ(cycle_cut_spaces(test::flipped_triangular_torus(3, 3)).b1 == 2);
    return true;
  });

  criterion(3, "checkerboard tori: [[4,2,2]] at L=2 and [[16,2,4]] at L=4", [] {
    REQ(params_match(code_generators(build_ktc(generate("square_torus:L=2"))), 4, 2, 2, 2, 2));
    REQ(params_match(code_generators(build_ktc(generate("square_torus:L=4"))), 16, 14, 2, 4, 4));
    return true;
  });

  criterion(4, "triangular color codes: k=4 for all three classes on both tori", [] {
    for (int cls : {1, 2, 3}) {
      CodeParams hex = stabilizer_params(
          code_generators(build_tcc(generate("hex_torus:a=3,b=3"), cls)), 18);
      REQ(hex.n == 18);
      REQ(hex.k == 4);
      CodeParams mix = stabilizer_params(
          code_generators(build_tcc(generate("torus_488:a=2,b=2"), cls)), 16);
      REQ(mix.n == 16);
      REQ(mix.k == 4);
    }
    return true;
  });

  criterion(5, "label-set enumeration: one 4-valent class, three 3-valent pair classes", [] {
    std::vector<LabelSet> four = enumerate_label_classes(4, 1);
    REQ(four.size() == 1);
    REQ(four[0].entries == std::vector<std::string>({"X", "Z", "X", "Z"}));
    std::vector<LabelSet> three = enumerate_label_classes(3, 2);
    REQ(three.size() == 3);
    REQ(three[0].entries == std::vector<std::string>({"XZ", "XZ", "XZ"}));
    REQ(three[1].entries == std::vector<std::string>({"XZ", "XZ", "XY"}));
    REQ(three[2].entries == std::vector<std::string>({"XZ", "XY", "ZY"}));
    REQ(enumerate_label_classes(5, 1).empty());
    REQ(enumerate_label_classes(5, 2).empty());
    REQ(enumerate_label_classes(4, 2).empty());
    return true;
  });

  criterion(6, "label transforms preserve [[16,2,4]]; count-changing moves are rejected", [] {
    HscCode ktc = build_ktc(generate("square_torus:L=4"));
    for (const auto& images : {std::array<char, 3>{'Y', 'X', 'Z'},
                               std::array<char, 3>{'Y', 'Z', 'X'},
                               std::array<char, 3>{'Z', 'Y', 'X'}}) {
      HscCode moved = apply_label_transform(ktc, LetterPermTransform{images, {}});
      REQ(params_match(code_generators(moved), 16, 14, 2, 4, 4));
    }
    std::vector<int> side = test::vertex_bipartition(ktc.map);
    REQ(!side.empty());
    std::vector<std::size_t> odd_side;
    for (std::size_t v = 0; v < side.size(); ++v)
      if (side[v] == 1) odd_side.push_back(v);
    HscCode rotated = apply_label_transform(ktc, RotationTransform{1, odd_side});
    REQ(params_match(code_generators(rotated), 16, 14, 2, 4, 4));

    bool rejected = false;
    try {
      apply_label_transform(ktc, LetterPermTransform{{'X', 'X', 'Z'}, {}});
    } catch (const Error& e) {
      rejected = e.kind() == ErrorKind::CountChangingTransform;
    }
    REQ(rejected);
    rejected = false;
    Classification poly = classify(test::polygon_cycle(6));
    try {
      apply_label_transform(*poly.code, RotationTransform{1, {0}});
    } catch (const Error& e) {
      rejected = e.kind() == ErrorKind::CountChangingTransform;
    }
    REQ(rejected);
    return true;
  });

  criterion(7, "punctures: first hole per color is free, then one logical per hole", [] {
    HscCode ktc = build_ktc(generate("square_torus:L=4"));
    std::vector<std::size_t> by_color[2];
    for (std::size_t f = 0; f < 16; ++f)
      by_color[ktc.coloring->color_of_face[f]].push_back(f);
    const char* names[2] = {"red", "green"};
    std::optional<PuncturedCode> pc;
    std::map<std::string, std::size_t> holes;
    for (int color : {0, 1}) {
      for (std::size_t i = 0; i < 3; ++i) {
        std::size_t face = by_color[color][i];
        pc = pc ? puncture(*pc, face, {0}) : puncture(ktc, face, {0});
        ++holes[names[color]];
        HoleCounts h = hole_logical_count(*pc);
        REQ(h.holes == holes);
        std::size_t formula = 0;
        for (const auto& [hole_color, count] : h.holes) {
          REQ(h.logicals.at(hole_color) == count - 1);  // rank-derived = formula
          formula += count - 1;
        }
        REQ(h.formula_total == formula);
        REQ(h.k_base == 2);
        REQ(h.k_punctured == 2 + formula);
        REQ(h.delta_k == formula);
        // the first hole of each color costs nothing
        if (holes[names[color]] == 1) REQ(h.logicals.at(names[color]) == 0);
      }
    }
    return true;
  });

  criterion(8, "boundary patches: segment and corner formulas agree with rank", [] {
    BoundaryPatch four = build_boundary_patch("KTC", {0, 1, 0, 1}, 2, 2);
    BoundaryCount fc = boundary_logical_count(four);
    REQ(fc.k == 1);
    REQ(four.three_valent_count == 4);
    REQ(fc.from_vertex_formula == four.three_valent_count / 2 - 1);
    REQ(fc.from_boundary_formula == four.boundary_runs / 2 - 1);
    REQ(fc.from_rank == fc.k);
    REQ(fc.from_vertex_formula == fc.from_rank);

    BoundaryPatch six = build_boundary_patch("KTC", {0, 1, 0, 1, 0, 1}, 3, 1);
    BoundaryCount sc = boundary_logical_count(six);
    REQ(sc.k == 2);
    REQ(six.three_valent_count == 6);
    REQ(sc.from_vertex_formula == six.three_valent_count / 2 - 1);
    REQ(sc.from_boundary_formula == six.boundary_runs / 2 - 1);
    REQ(sc.from_rank == 2);

    BoundaryPatch tri = build_boundary_patch("TCC", {0, 1, 2}, 1, 0);
    BoundaryCount tc = boundary_logical_count(tri);
    REQ(tri.two_valent_count == 3);
    REQ(tc.k == 1);
    REQ(tc.from_vertex_formula == tri.two_valent_count - 2);
    REQ(tc.from_rank == 1);
    return true;
  });

  criterion(9, "density: obstructed lattices stay positive, hexagonal tori vanish", [] {
    DensityReport flip = density_analysis(dual(test::flipped_triangular_torus(3, 3)),
                                          DensityPolicy::kMaxAdmissible);
    REQ(flip.verdict == "persistent-local-logicals");
    REQ(flip.density > Rational(0));
    for (const char* spec : {"mixed_strip:w=2,h=2", "mixed_strip:w=4,h=4"}) {
      DensityReport r = density_analysis(generate(spec), DensityPolicy::kMaxAdmissible);
      REQ(r.verdict == "persistent-local-logicals");
      REQ(r.density == Rational(1, 4));
    }
    // a concrete weight-1 logical operator on the smallest strip
    CombinatorialMap strip = generate("mixed_strip:w=2,h=2");
    std::vector<PauliWord> gens;
    for (const std::vector<Dart>& cycle : strip.face_cycles()) {
      std::string word(strip.edge_count(), 'I');
      for (Dart d : cycle) word[d / 2] = 'Z';
      gens.push_back(PauliWord::from_string(word));
    }
    DistanceResult weight1 = min_distance(gens, 2);
    REQ(weight1.distance.has_value());
    REQ(*weight1.distance == 1);
    // two generators per hexagonal face clear the obstruction exactly
    DensityReport hex = density_analysis(generate("hex_torus:a=3,b=3"),
                                         DensityPolicy::kMaxAdmissible);
    REQ(hex.m_max == std::vector<std::size_t>(9, 2));
    REQ(hex.density == Rational(0));
    REQ(hex.verdict == "vanishing");
    return true;
  });

  criterion(10, "average face size: 4, 6 and 3 with the closed form and 2E/F", [] {
    struct Case {
      int valence, genus, vertices;
      long expected;
      CombinatorialMap map;
    };
    const std::vector<Case> cases{
        {4, 1, 16, 4, generate("square_torus:L=4")},
        {3, 1, 18, 6, generate("hex_torus:a=3,b=3")},
        {4, 0, 6, 3, test::octahedron()},
    };
    for (const Case& c : cases) {
      FavgResult r = favg_analysis(c.valence, c.genus, c.vertices);
      REQ(r.value == Rational(c.expected));
      REQ(c.map.uniform_valence() == std::size_t(c.valence));
      REQ(euler_genus(c.map).genus == std::size_t(c.genus));
      REQ(c.map.vertex_count() == std::size_t(c.vertices));
      REQ(r.value == Rational(2 * long(c.map.edge_count()), long(c.map.face_count())));
    }
    return true;
  });

  criterion(11, "syndromes: one X flags two checks, stabilizer elements flag none", [] {
    HscCode ktc = build_ktc(generate("square_torus:L=4"));
    std::vector<PauliWord> gens = code_generators(ktc);
    PauliWord lone_x(16);
    lone_x.set_letter(0, 'X');
    REQ(syndrome(lone_x, gens).popcount() == 2);
    REQ(excitations(ktc, lone_x).size() == 2);
    REQ(syndrome(PauliWord(16), gens).popcount() == 0);

    std::mt19937 rng(20260816);
    std::vector<PauliWord> tcc_gens =
        code_generators(build_tcc(generate("hex_torus:a=3,b=3"), 1));
    for (const std::vector<PauliWord>* group : {&gens, &tcc_gens}) {
      std::size_t n = (*group)[0].size();
      for (int trial = 0; trial < 100; ++trial) {
        PauliWord element(n);
        for (const PauliWord& g : *group)
          if (rng() & 1) element = element.multiplied(g);
        REQ(syndrome(element, *group).popcount() == 0);
      }
    }
    return true;
  });

  if (failures != 0) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
