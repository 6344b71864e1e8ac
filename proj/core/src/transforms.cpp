#include "homcode/transforms.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <sstream>

#include "homcode/error.hpp"

namespace homcode {

CombinatorialMap dual(const CombinatorialMap& map) {
  std::vector<Dart> sigma_star(map.dart_count()), alpha_star(map.dart_count());
  for (Dart d = 0; d < map.dart_count(); ++d) {
    sigma_star[d] = map.phi(d);
    alpha_star[d] = map.alpha(d);
  }
  return CombinatorialMap::build(std::move(alpha_star), std::move(sigma_star), map.meta(),
                                 !map.connected());
}

MedialResult medial(const CombinatorialMap& map) {
  const std::size_t n = map.dart_count();
  std::vector<Dart> alpha_m(2 * n), sigma_m(2 * n);
  for (Dart d = 0; d < n; ++d) {
    alpha_m[2 * d] = 2 * d + 1;
    alpha_m[2 * d + 1] = 2 * d;
    sigma_m[2 * d] = 2 * map.sigma_inv(d) + 1;
    sigma_m[2 * d + 1] = 2 * map.alpha(map.sigma(d));
  }
  MedialResult result;
  result.map = CombinatorialMap::build(std::move(alpha_m), std::move(sigma_m), {},
                                       !map.connected());
  result.provenance.resize(result.map.face_count());
  for (std::size_t f = 0; f < result.map.face_count(); ++f) {
    Dart rep = result.map.face_cycles()[f].front();
    if (rep % 2 == 0) {
      // Even darts trace a face inside an original face.
      result.provenance[f] = {MedialFaceOrigin::Kind::CycleFromFace,
                              map.face_of(map.alpha(rep / 2))};
    } else {
      // Odd darts trace a face around an original vertex.
      result.provenance[f] = {MedialFaceOrigin::Kind::CutFromVertex, map.vertex_of(rep / 2)};
    }
  }
  return result;
}

std::vector<std::vector<std::size_t>> face_adjacency(const CombinatorialMap& map) {
  std::vector<std::vector<std::size_t>> adj(map.face_count());
  for (const auto& [d, dd] : map.edge_darts()) {
    std::size_t f = map.face_of(d), g = map.face_of(dd);
    adj[f].push_back(g);
    adj[g].push_back(f);
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return adj;
}

namespace {

std::string face_list_json(const char* key, const std::vector<std::size_t>& faces) {
  std::ostringstream out;
  out << "{\"" << key << "\":[";
  for (std::size_t i = 0; i < faces.size(); ++i) out << (i ? "," : "") << faces[i];
  out << "]}";
  return out.str();
}

// Finds the self-adjacent face (same face on both sides of an edge), if any;
// such a face can never be properly colored.
std::optional<std::pair<std::size_t, std::size_t>> self_adjacent_face(
    const CombinatorialMap& map) {
  for (std::size_t e = 0; e < map.edge_count(); ++e) {
    auto [d, dd] = map.edge_darts()[e];
    if (map.face_of(d) == map.face_of(dd)) return std::make_pair(map.face_of(d), e);
  }
  return std::nullopt;
}

FaceColoring two_coloring(const CombinatorialMap& map) {
  if (auto self = self_adjacent_face(map))
    throw Error(ErrorKind::NotColorable, "a face borders itself across an edge",
                "{\"self_adjacent_face\":" + std::to_string(self->first) +
                    ",\"edge\":" + std::to_string(self->second) + "}");
  FaceColoring coloring{2, std::vector<int>(map.face_count(), -1)};
  auto adj = face_adjacency(map);
  std::vector<std::size_t> parent(map.face_count(), SIZE_MAX);
  // Faces are colored component by component (the face-adjacency graph of a
  // connected map is connected, but stay safe); BFS keeps witness paths short.
  for (std::size_t root = 0; root < map.face_count(); ++root) {
    if (coloring.color_of_face[root] != -1) continue;
    coloring.color_of_face[root] = 0;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      std::size_t f = queue.front();
      queue.pop_front();
      for (std::size_t g : adj[f]) {
        if (coloring.color_of_face[g] == -1) {
          coloring.color_of_face[g] = 1 - coloring.color_of_face[f];
          parent[g] = f;
          queue.push_back(g);
        } else if (coloring.color_of_face[g] == coloring.color_of_face[f]) {
          // Reconstruct the odd cycle witness through the BFS tree.
          std::vector<std::size_t> up_f{f}, up_g{g};
          auto depth = [&](std::size_t x) {
            std::size_t d = 0;
            while (parent[x] != SIZE_MAX) { x = parent[x]; ++d; }
            return d;
          };
          std::size_t a = f, b = g, da = depth(f), db = depth(g);
          while (da > db) { a = parent[a]; up_f.push_back(a); --da; }
          while (db > da) { b = parent[b]; up_g.push_back(b); --db; }
          while (a != b) {
            a = parent[a]; up_f.push_back(a);
            b = parent[b]; up_g.push_back(b);
          }
          std::vector<std::size_t> cycle(up_f.begin(), up_f.end());
          for (auto it = up_g.rbegin() + 1; it != up_g.rend(); ++it) cycle.push_back(*it);
          throw Error(ErrorKind::NotColorable,
                      "face-adjacency graph contains an odd cycle",
                      face_list_json("odd_face_cycle", cycle));
        }
      }
    }
  }
  return coloring;
}

FaceColoring three_coloring(const CombinatorialMap& map) {
  for (std::size_t f = 0; f < map.face_count(); ++f) {
    if (map.face_length(f) % 2 != 0)
      throw Error(ErrorKind::NotColorable, "map contains an odd face",
                  "{\"odd_face\":" + std::to_string(f) +
                      ",\"length\":" + std::to_string(map.face_length(f)) + "}");
  }
  if (auto self = self_adjacent_face(map))
    throw Error(ErrorKind::NotColorable, "a face borders itself across an edge",
                "{\"self_adjacent_face\":" + std::to_string(self->first) +
                    ",\"edge\":" + std::to_string(self->second) + "}");
  auto adj = face_adjacency(map);
  std::vector<int> colors(map.face_count(), -1);
  // Lexicographically first proper assignment: faces in id order, colors
  // ascending, classic backtracking.  Face 0 is pinned to color 0 by the
  // ascending color order itself.
  std::size_t f = 0;
  std::vector<int> next_try(map.face_count(), 0);
  while (true) {
    if (f == map.face_count()) return FaceColoring{3, colors};
    bool placed = false;
    for (int c = next_try[f]; c < 3; ++c) {
      bool ok = true;
      for (std::size_t g : adj[f])
        if (colors[g] == c) { ok = false; break; }
      if (ok) {
        colors[f] = c;
        next_try[f] = c + 1;
        placed = true;
        break;
      }
    }
    if (placed) {
      ++f;
      if (f < map.face_count()) next_try[f] = 0;
    } else {
      colors[f] = -1;
      next_try[f] = 0;
      if (f == 0)
        throw Error(ErrorKind::NotColorable, "no proper 3-face-coloring exists",
                    "{\"exhausted\":true}");
      --f;
      colors[f] = -1;
    }
  }
}

}  // namespace

FaceColoring face_coloring(const CombinatorialMap& map, std::size_t palette) {
  if (palette == 2) {
    if (map.uniform_valence() != 4)
      throw Error(ErrorKind::WrongValence, "two-face-coloring applies to 4-valent maps only");
    return two_coloring(map);
  }
  if (palette == 3) {
    if (map.uniform_valence() != 3)
      throw Error(ErrorKind::WrongValence, "three-face-coloring applies to 3-valent maps only");
    return three_coloring(map);
  }
  throw Error(ErrorKind::ValidationError, "palette must be 2 or 3");
}

bool is_proper_face_coloring(const CombinatorialMap& map, const FaceColoring& coloring) {
  if (coloring.color_of_face.size() != map.face_count()) return false;
  for (int c : coloring.color_of_face)
    if (c < 0 || std::size_t(c) >= coloring.palette) return false;
  for (const auto& [d, dd] : map.edge_darts())
    if (coloring.color_of_face[map.face_of(d)] == coloring.color_of_face[map.face_of(dd)])
      return false;
  return true;
}

}  // namespace homcode
