#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "homcode/hsc.hpp"

namespace homcode {

// A planar code patch with colored boundary segments.
struct BoundaryPatch {
  HscCode code;
  std::string family;  // "KTC" or "TCC"
  std::size_t outer_face = 0;
  std::vector<int> segment_colors;       // the declared boundary sequence
  std::size_t two_valent_count = 0;      // |V_2| of the patch map
  std::size_t three_valent_count = 0;    // |V_3|
  std::size_t boundary_runs = 0;         // distinct boundary color segments
};

// Builds a planar patch with the given boundary color sequence.
//
// family "KTC": seq holds 4 or 6 colors from {0, 1}, cyclically
// adjacent-distinct.  Four segments give a size_a x size_b rectangle of
// checkerboard cells; six give a T-shaped patch (a size_a x 1 bar, size_a >=
// 3, plus one stem cell, size_b == 1).  Boundary edges whose adjacent cell
// color differs from the segment color grow a weight-2 generator (a 2-gon
// face), which makes color-change corners 3-valent and all other boundary
// vertices 4-valent.  The checkerboard phase is fixed by the sequence (first
// segment for rectangles, third for the T-shape, where the reflex corners
// force it).
//
// family "TCC": seq holds colors from {0, 1, 2}, cyclically
// adjacent-distinct.  A sequence of length 3*size_a gives the triangular
// patch with size_a segments per side (size_a = 1 is the 7-qubit instance);
// a sequence of length 4 gives the two-cell domino.  The boundary colors act
// as segment tags; every cell carries the (X, Z) generator pair.
//
// Anything else raises InvalidBoundarySpec.
BoundaryPatch build_boundary_patch(const std::string& family, const std::vector<int>& seq,
                                   std::size_t size_a, std::size_t size_b);

struct BoundaryCount {
  std::size_t k = 0;                      // logical qubits (rank-derived)
  std::size_t from_vertex_formula = 0;    // |V_3|/2 - 1 (KTC) or |V_2| - 2 (TCC)
  std::size_t from_boundary_formula = 0;  // runs/2 - 1 (KTC) or runs - 2 (TCC)
  std::size_t from_rank = 0;              // n - rank of the generators
};

// Counts the logical qubits of a patch three ways and checks they agree.
BoundaryCount boundary_logical_count(const BoundaryPatch& patch);

}  // namespace homcode
