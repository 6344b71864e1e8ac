#pragma once

#include <cstddef>
#include <vector>

#include "homcode/map.hpp"

namespace homcode {

// Surface dual: vertices and faces swap roles, edges persist.  With the
// phi = sigma∘alpha face convention this is realized by sigma* = phi,
// alpha* = alpha, which makes dual(dual(m)) reproduce m exactly (same dart
// numbering), not merely up to isomorphism.
CombinatorialMap dual(const CombinatorialMap& map);

// Provenance of one face of a medial map: cycle-type faces sit inside an
// original face, cut-type faces surround an original vertex.
struct MedialFaceOrigin {
  enum class Kind { CycleFromFace, CutFromVertex };
  Kind kind;
  std::size_t origin;  // original face id or original vertex id
};

struct MedialResult {
  CombinatorialMap map;                     // always 4-valent
  std::vector<MedialFaceOrigin> provenance;  // indexed by new face id
};

// Medial transform: one new vertex per old edge, one new edge per old dart.
// Old dart d becomes the new edge {2d, 2d+1}; the new rotation is
//   sigma_M(2d)   = 2*sigma_inv(d) + 1
//   sigma_M(2d+1) = 2*alpha(sigma(d))
// which yields 4-valent vertices and splits the new faces into cycle-type
// (even darts, one per old face) and cut-type (odd darts, one per old
// vertex).  Genus is preserved.
MedialResult medial(const CombinatorialMap& map);

struct FaceColoring {
  std::size_t palette = 0;          // 2 or 3
  std::vector<int> color_of_face;   // face id -> color in [0, palette)
};

// Proper face coloring (faces sharing an edge get distinct colors), with
// face 0 pinned to color 0 and the lexicographically first valid assignment
// chosen, so results are deterministic.  palette 2 requires a 4-valent map
// and palette 3 a 3-valent map (WrongValence otherwise).  NotColorable
// carries a witness: an odd cycle of faces for palette 2, an odd face or
// the exhausted search for palette 3.
FaceColoring face_coloring(const CombinatorialMap& map, std::size_t palette);

// True when `coloring` is a proper face coloring of `map`.
bool is_proper_face_coloring(const CombinatorialMap& map, const FaceColoring& coloring);

// Face-adjacency lists (by shared edge), deduplicated and sorted.
std::vector<std::vector<std::size_t>> face_adjacency(const CombinatorialMap& map);

}  // namespace homcode
