#include "homcode/homology.hpp"

#include "homcode/error.hpp"

namespace homcode {

Gf2Matrix incidence_matrix(const CombinatorialMap& map) {
  Gf2Matrix inc(map.vertex_count(), map.edge_count());
  for (std::size_t e = 0; e < map.edge_count(); ++e) {
    auto [u, v] = map.edge_endpoints(e);
    if (u == v) continue;  // self-loop column stays zero
    inc.set(u, e, true);
    inc.set(v, e, true);
  }
  return inc;
}

BitVec face_edge_vector(const CombinatorialMap& map, std::size_t face) {
  if (face >= map.face_count())
    throw Error(ErrorKind::ValidationError, "face id out of range");
  BitVec vec(map.edge_count());
  for (Dart d : map.face_cycles()[face]) vec.flip(map.edge_of(d));
  return vec;
}

CycleCutSpaces cycle_cut_spaces(const CombinatorialMap& map) {
  if (map.dart_count() == 0)
    throw Error(ErrorKind::DegenerateParameters, "homology of the empty map is undefined");
  if (!map.connected())
    throw Error(ErrorKind::Disconnected, "cycle/cut decomposition requires a connected map");

  CycleCutSpaces spaces;
  const std::size_t edges = map.edge_count();
  Gf2Matrix inc = incidence_matrix(map);

  spaces.cycles.kind = SpaceKind::Cycle;
  spaces.cycles.ambient_dimension = edges;
  spaces.cycles.vectors = inc.kernel_basis();

  // The star vectors of the first |V|-1 vertices are independent for a
  // connected map and span the cut space.
  spaces.cuts.kind = SpaceKind::Cut;
  spaces.cuts.ambient_dimension = edges;
  Gf2Eliminator cut_rank(edges);
  for (std::size_t v = 0; v < map.vertex_count(); ++v) {
    BitVec row = inc.row(v);
    if (cut_rank.add(row)) spaces.cuts.vectors.push_back(row);
  }

  Gf2Eliminator facial(edges);
  for (std::size_t f = 0; f < map.face_count(); ++f) {
    spaces.face_vectors.push_back(face_edge_vector(map, f));
    facial.add(spaces.face_vectors.back());
  }
  spaces.facial_rank = facial.rank();
  spaces.b1 = spaces.cycles.vectors.size() - spaces.facial_rank;
  return spaces;
}

bool same_subspace(const std::vector<BitVec>& a, const std::vector<BitVec>& b, std::size_t dim) {
  Gf2Eliminator ea(dim), eb(dim);
  for (const BitVec& v : a) ea.add(v);
  for (const BitVec& v : b) eb.add(v);
  if (ea.rank() != eb.rank()) return false;
  for (const BitVec& v : a)
    if (!eb.contains(v)) return false;
  for (const BitVec& v : b)
    if (!ea.contains(v)) return false;
  return true;
}

}  // namespace homcode
