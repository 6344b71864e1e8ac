#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "homcode/label_set.hpp"
#include "homcode/map.hpp"
#include "homcode/pauli.hpp"
#include "homcode/stabilizer.hpp"
#include "homcode/transforms.hpp"

namespace homcode {

// Letter assignment of one face: one or two generator strings, each as long
// as the face cycle, position p acting on the vertex under dart p of the
// cycle.  Letters are X, Y, Z.
struct FaceGenerators {
  std::size_t face = 0;
  std::vector<std::string> gens;
};

// A homological stabilizer code: qubits on the vertices of a surface map,
// generators attached to its faces.
struct HscCode {
  CombinatorialMap map;
  std::vector<FaceGenerators> faces;  // sorted by face id
  std::optional<FaceColoring> coloring;
  std::string family = "custom";  // "KTC", "TCC", "Polygon", "custom"
  std::optional<int> tcc_class;   // 1..3 when family == "TCC"

  std::size_t qubit_count() const { return map.vertex_count(); }
};

// The Pauli word induced by one generator of a face entry; letters at
// repeated visits of a vertex multiply with exact phase tracking.  A residual
// imaginary phase (non-Hermitian word) is reported as MalformedGenerators.
PauliWord face_generator_word(const CombinatorialMap& map, const FaceGenerators& entry,
                              std::size_t slot);

// All generator words, faces in ascending id order, slots ascending inside a
// face; `index` receives the matching (face, slot) per word when non-null.
std::vector<PauliWord> code_generators(const HscCode& code,
                                       std::vector<std::pair<std::size_t, std::size_t>>* index =
                                           nullptr);

// The label set a vertex sees: entries in rotation order over the incident
// generator-carrying face corners, starting from the smallest incident face
// id (smallest dart on ties).
LabelSet vertex_label_set(const HscCode& code, std::size_t vertex);

struct Rejection {
  std::string rule;     // "I", "IIA", "III", "II", "commutation"
  std::string witness;  // JSON detail
  std::string message;
};

struct AdmissibilityResult {
  std::optional<HscCode> code;
  std::optional<Rejection> rejection;
  bool admissible() const { return code.has_value(); }
};

// Checks the admissibility rules for a letter assignment on a map:
//   I    generators match the faces (full coverage, even two-generator faces
//        with letterwise-distinct pairs, induced support = face vertices);
//        a 2-valent cycle may leave one face empty (the polygon family);
//   IIA  every vertex sees at least two letter types;
//   III  every vertex sees the same label class (two-generator entries
//        compared up to their per-face generator order);
//   II   the logical count matches the genus (2g for single-generator faces,
//        4g for double), and bulk-sized codes (>= 12 qubits) with k >= 1
//        admit no logical operator of weight <= 2.
// Commutation failures are reported with rule tag "commutation".  A rejection
// is a value, not an exception; exceptions signal malformed input shapes.
AdmissibilityResult check_admissibility(const CombinatorialMap& map,
                                        std::vector<FaceGenerators> faces);

// Smallest qubit count at which the weight-2 logical floor of rule II is
// enforced; below it, boundary-sized instances legitimately carry distance-2
// logicals.
inline constexpr std::size_t kBulkMinQubits = 12;

// Kitaev-style code on a 2-face-colorable 4-valent map: color-0 faces carry
// all-X generators, color-1 faces all-Z.
HscCode build_ktc(const CombinatorialMap& map);

// Color-code-style code on a 3-face-colorable 3-valent map.  The three label
// classes attach letter pairs to colors (0, 1, 2) in declared order:
//   class 1: (X,Z) (X,Z) (X,Z)
//   class 2: (X,Z) (X,Z) (X,Y)
//   class 3: (X,Z) (X,Y) (Z,Y)
HscCode build_tcc(const CombinatorialMap& map, int class_index);

struct Classification {
  std::string family;  // "KTC", "TCC", "PolygonCode", "Inadmissible"
  std::vector<int> classes;  // admissible TCC label classes
  std::optional<HscCode> code;
  std::optional<CodeParams> params;
  std::string reason;   // set when family == "Inadmissible"
  std::string witness;  // JSON detail
};

// Decides which homological code family a connected map supports:
// uniform 4-valent and 2-colorable => KTC; uniform 3-valent and 3-colorable
// => TCC (classes 1..3); uniform 2-valent => polygon code (even cycles);
// everything else is Inadmissible with one of the reasons
// "valence>=5", "1-valent", "mixed-valence", "4-colorable-3-valent",
// "4-valent-not-2-face-colorable", "odd-polygon".
Classification classify(const CombinatorialMap& map);

// Relabeling moves on a code.  An empty vertex list means every vertex.
struct LetterPermTransform {
  std::array<char, 3> images = {'X', 'Y', 'Z'};  // images of X, Y, Z
  std::vector<std::size_t> vertices;
};
struct RotationTransform {
  std::size_t steps = 0;
  std::vector<std::size_t> vertices;
};
struct PairSwapTransform {};  // swap the two generators of every face

using LabelTransform = std::variant<LetterPermTransform, RotationTransform, PairSwapTransform>;

// Applies a label transform and revalidates commutation.  Non-bijective
// letter maps and rotations between corners of unequal generator count raise
// CountChangingTransform; a transformed assignment whose generators no longer
// commute raises TransformBreaksCommutation.
HscCode apply_label_transform(const HscCode& code, const LabelTransform& transform);

struct Excitation {
  std::size_t face = 0;
  std::size_t slot = 0;
  char generator_type = 'M';  // uniform letter of the generator, 'M' if mixed
  int color = -1;             // face color when the code carries a coloring
};

// Generators violated by an error, in generator order.
std::vector<Excitation> excitations(const HscCode& code, const PauliWord& error);

}  // namespace homcode
