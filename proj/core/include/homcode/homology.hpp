#pragma once

#include <cstddef>
#include <vector>

#include "homcode/gf2.hpp"
#include "homcode/map.hpp"

namespace homcode {

enum class SpaceKind { Cycle, Cut };

// A basis of a subspace of the GF(2) edge space of a map.
struct Gf2VectorSpaceBasis {
  SpaceKind kind = SpaceKind::Cycle;
  std::size_t ambient_dimension = 0;  // |E|
  std::vector<BitVec> vectors;        // independent, deterministic order

  std::size_t dimension() const { return vectors.size(); }
};

struct CycleCutSpaces {
  Gf2VectorSpaceBasis cycles;          // kernel of the vertex-edge incidence matrix
  Gf2VectorSpaceBasis cuts;            // row space of the incidence matrix
  std::vector<BitVec> face_vectors;    // edge-support vector of every face
  std::size_t facial_rank = 0;         // rank of the face vectors (|F| - 1 when connected)
  std::size_t b1 = 0;                  // dim(cycles) - facial_rank = 2 * genus
};

// Vertex-by-edge incidence matrix over GF(2).  A self-loop touches its vertex
// twice, so its column is zero.
Gf2Matrix incidence_matrix(const CombinatorialMap& map);

// Characteristic vector of the edges bounding a face (edges traversed twice by
// the same face cancel out).
BitVec face_edge_vector(const CombinatorialMap& map, std::size_t face);

// Computes cycle space, cut space, facial boundaries and the first Betti
// number of a connected map.
CycleCutSpaces cycle_cut_spaces(const CombinatorialMap& map);

// True when the two vector lists span the same subspace of GF(2)^dim.
bool same_subspace(const std::vector<BitVec>& a, const std::vector<BitVec>& b, std::size_t dim);

}  // namespace homcode
