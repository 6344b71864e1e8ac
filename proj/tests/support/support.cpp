#include "support.hpp"

#include <algorithm>
#include <map>

#include "homcode/error.hpp"

namespace homcode::test {

CombinatorialMap from_rings(const std::vector<std::vector<std::size_t>>& rings) {
  MapBuilder b;
  for (std::size_t v = 0; v < rings.size(); ++v) b.add_vertex();
  std::map<std::pair<std::size_t, std::size_t>, std::pair<Dart, Dart>> edge_darts;
  for (std::size_t u = 0; u < rings.size(); ++u)
    for (std::size_t w : rings[u]) {
      auto key = std::minmax(u, w);
      if (edge_darts.count({key.first, key.second})) continue;
      auto [du, dw] = b.add_edge(u, w);
      edge_darts[{key.first, key.second}] = {du, dw};
    }
  for (std::size_t u = 0; u < rings.size(); ++u) {
    std::vector<Dart> order;
    for (std::size_t w : rings[u]) {
      auto key = std::minmax(u, w);
      auto [du, dw] = edge_darts.at({key.first, key.second});
      order.push_back(u <= w ? du : dw);
    }
    b.set_rotation(u, order);
  }
  return b.build();
}

CombinatorialMap tetrahedron() {
  return from_rings({{1, 2, 3}, {2, 0, 3}, {0, 1, 3}, {1, 0, 2}});
}

CombinatorialMap cube() {
  // Inner square 0..3, outer square 4..7, spokes i -> i+4; rotations read off
  // a planar drawing with both squares counterclockwise.
  return from_rings({
      {1, 3, 4}, {2, 0, 5}, {6, 3, 1}, {2, 7, 0},
      {5, 0, 7}, {6, 1, 4}, {7, 2, 5}, {6, 4, 3},
  });
}

CombinatorialMap octahedron() {
  return from_rings({
      {5, 1, 2, 4}, {5, 3, 2, 0}, {0, 1, 3, 4},
      {1, 5, 4, 2}, {5, 0, 2, 3}, {3, 1, 0, 4},
  });
}

CombinatorialMap icosahedron() {
  // Rotation orders derived from the coordinate model with vertices at the
  // cyclic permutations of (0, ±1, ±phi), counterclockwise around the
  // outward normal of each vertex.
  return from_rings({
      {1, 2, 8, 4, 6}, {5, 7, 2, 0, 6}, {1, 7, 3, 8, 0}, {2, 7, 9, 10, 8},
      {6, 0, 8, 10, 11}, {7, 1, 6, 11, 9}, {5, 1, 0, 4, 11}, {2, 1, 5, 9, 3},
      {0, 2, 3, 10, 4}, {7, 5, 11, 10, 3}, {3, 9, 11, 4, 8}, {9, 5, 6, 4, 10},
  });
}

CombinatorialMap triangular_prism() {
  // Inner triangle 0,1,2 (counterclockwise), outer triangle 3,4,5, spokes
  // i -> i+3; two triangle faces and three squares.
  return from_rings({
      {1, 3, 2}, {2, 4, 0}, {0, 5, 1},
      {0, 4, 5}, {1, 5, 3}, {2, 3, 4},
  });
}

CombinatorialMap polygon_cycle(std::size_t n) {
  MapBuilder b;
  for (std::size_t v = 0; v < n; ++v) b.add_vertex();
  for (std::size_t v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return b.build();
}

CombinatorialMap flipped_triangular_torus(std::size_t a, std::size_t b) {
  MapBuilder bld;
  auto id = [&](std::size_t i, std::size_t j) { return (j % b) * a + (i % a); };
  for (std::size_t v = 0; v < a * b; ++v) bld.add_vertex();
  // Darts stored per (vertex, compass direction); directions are numbered
  // 0=E, 1=NE, 2=N with reverses 3=W, 4=SW, 5=S, plus 6=NW / 7=SE for the
  // flipped diagonal.
  std::map<std::pair<std::size_t, int>, Dart> at;
  auto add = [&](std::size_t i, std::size_t j, int dir, std::size_t di, std::size_t dj) {
    std::size_t u = id(i, j), w = id(i + di, j + dj);
    auto [du, dw] = bld.add_edge(u, w);
    at[{u, dir}] = du;
    at[{w, dir + 3}] = dw;
  };
  for (std::size_t j = 0; j < b; ++j)
    for (std::size_t i = 0; i < a; ++i) {
      add(i, j, 0, 1, 0);
      if (!(i == 0 && j == 0)) add(i, j, 1, 1, 1);  // NE diagonal, skipped at origin
      add(i, j, 2, 0, 1);
    }
  {
    std::size_t u = id(1, 0), w = id(0, 1);
    auto [du, dw] = bld.add_edge(u, w);
    at[{u, 6}] = du;
    at[{w, 7}] = dw;
  }
  for (std::size_t j = 0; j < b; ++j)
    for (std::size_t i = 0; i < a; ++i) {
      std::size_t v = id(i, j);
      std::vector<Dart> order;
      // Counterclockwise by angle: E 0, NE 45, N 90, NW 135, W 180, SW 225,
      // S 270, SE 315 degrees.
      for (int dir : {0, 1, 2, 6, 3, 4, 5, 7})
        if (at.count({v, dir})) order.push_back(at.at({v, dir}));
      bld.set_rotation(v, order);
    }
  return bld.build({{"family", "flipped_triangular_torus"}});
}

CombinatorialMap remove_edge(const CombinatorialMap& map, std::size_t e) {
  Dart d0 = map.edge_darts()[e].first, d1 = map.edge_darts()[e].second;
  std::vector<Dart> rename(map.dart_count());
  std::vector<Dart> keep;
  for (Dart d = 0; d < map.dart_count(); ++d)
    if (d != d0 && d != d1) {
      rename[d] = Dart(keep.size());
      keep.push_back(d);
    }
  auto next_kept = [&](Dart d) {
    Dart s = map.sigma(d);
    while (s == d0 || s == d1) s = map.sigma(s);
    return s;
  };
  std::vector<Dart> alpha(keep.size()), sigma(keep.size());
  for (Dart d : keep) {
    alpha[rename[d]] = rename[map.alpha(d)];
    sigma[rename[d]] = rename[next_kept(d)];
  }
  return CombinatorialMap::build(alpha, sigma);
}

bool same_subspace(const std::vector<BitVec>& a, const std::vector<BitVec>& b) {
  Gf2Matrix ma, mb, mab;
  for (const BitVec& v : a) {
    ma.append_row(v);
    mab.append_row(v);
  }
  for (const BitVec& v : b) {
    mb.append_row(v);
    mab.append_row(v);
  }
  std::size_t ra = ma.rank();
  return ra == mb.rank() && ra == mab.rank();
}

std::vector<int> vertex_bipartition(const CombinatorialMap& map) {
  std::vector<int> side(map.vertex_count(), -1);
  if (side.empty()) return side;
  side[0] = 0;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (Dart d : map.vertex_cycles()[v]) {
      std::size_t w = map.vertex_of(map.alpha(d));
      if (side[w] == -1) {
        side[w] = 1 - side[v];
        stack.push_back(w);
      } else if (side[w] == side[v]) {
        return {};
      }
    }
  }
  return side;
}

}  // namespace homcode::test
