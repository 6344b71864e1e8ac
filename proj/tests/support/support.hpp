#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "homcode/gf2.hpp"
#include "homcode/map.hpp"

namespace homcode::test {

// Builds a map from counterclockwise neighbor rings: rings[v] lists the
// neighbors of v in rotation order.  Every edge must appear in both endpoint
// rings; parallel edges are not supported.
CombinatorialMap from_rings(const std::vector<std::vector<std::size_t>>& rings);

// The five reference polyhedra / small maps used across the suites, all with
// sphere or torus embeddings fixed by explicit rotation systems.
CombinatorialMap tetrahedron();        // V=4  E=6  F=4  genus 0
CombinatorialMap cube();               // V=8  E=12 F=6  genus 0
CombinatorialMap octahedron();         // V=6  E=12 F=8  genus 0
CombinatorialMap icosahedron();        // V=12 E=30 F=20 genus 0
CombinatorialMap triangular_prism();   // V=6  E=9  F=5  genus 0

// Cycle graph on n vertices: n 2-valent vertices, two faces.
CombinatorialMap polygon_cycle(std::size_t n);

// Triangulated a x b torus with east, north and north-east edges, except that
// the diagonal of the origin square is flipped to run north-west.  The flip
// leaves two 5-valent and two 7-valent vertices in an otherwise 6-valent
// lattice; its dual is 3-valent with four odd faces.
CombinatorialMap flipped_triangular_torus(std::size_t a, std::size_t b);

// Copy of `map` with edge e deleted (darts renumbered, metadata dropped).
CombinatorialMap remove_edge(const CombinatorialMap& map, std::size_t e);

// Equality of the GF(2) row spaces spanned by `a` and `b`.
bool same_subspace(const std::vector<BitVec>& a, const std::vector<BitVec>& b);

// Proper 2-coloring of the vertices; empty when the graph has an odd cycle.
// side[v] is 0 or 1 with side[0] == 0.
std::vector<int> vertex_bipartition(const CombinatorialMap& map);

}  // namespace homcode::test
