#include "homcode/boundary.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "homcode/error.hpp"
#include "homcode/stabilizer.hpp"

namespace homcode {

namespace {

using Coord = std::pair<long long, long long>;  // (x, y) in the plane

Coord operator+(Coord a, Coord b) { return {a.first + b.first, a.second + b.second}; }
Coord operator-(Coord a, Coord b) { return {a.first - b.first, a.second - b.second}; }

std::string coord_json(Coord c) {
  return "[" + std::to_string(c.first) + "," + std::to_string(c.second) + "]";
}

// Checks a boundary sequence: non-empty, colors within the palette, no two
// cyclically adjacent segments of equal color.
void validate_sequence(const std::vector<int>& seq, int palette, const std::string& family) {
  if (seq.empty())
    throw Error(ErrorKind::InvalidBoundarySpec, family + " patch needs boundary colors");
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] < 0 || seq[i] >= palette)
      throw Error(ErrorKind::InvalidBoundarySpec,
                  family + " boundary colors range over 0.." + std::to_string(palette - 1),
                  "{\"segment\":" + std::to_string(i) + ",\"color\":" + std::to_string(seq[i]) +
                      "}");
    if (seq.size() > 1 && seq[i] == seq[(i + 1) % seq.size()])
      throw Error(ErrorKind::InvalidBoundarySpec,
                  "adjacent boundary segments must change color",
                  "{\"segment\":" + std::to_string(i) + ",\"color\":" + std::to_string(seq[i]) +
                      "}");
  }
}

// Sorts direction vectors counterclockwise starting from east, exactly.
bool ccw_less(Coord a, Coord b) {
  auto half = [](Coord d) {
    return (d.second < 0 || (d.second == 0 && d.first < 0)) ? 1 : 0;
  };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  long long cross = a.first * b.second - a.second * b.first;
  return cross > 0;
}

// Directed-edge dart registry shared by the coordinate-based builders.
struct DartTable {
  std::map<std::pair<Coord, Coord>, Dart> dart;
  Dart at(Coord u, Coord v) const {
    auto it = dart.find({u, v});
    if (it == dart.end())
      throw Error(ErrorKind::ValidationError,
                  "internal patch construction lost an edge",
                  "{\"from\":" + coord_json(u) + ",\"to\":" + coord_json(v) + "}");
    return it->second;
  }
};

// ---------------------------------------------------------------------------
// KTC patches: polyomino grids with weight-2 boundary generators.

struct KtcShape {
  std::set<Coord> cells;
  std::vector<Coord> corner_path;       // polygon corners, counterclockwise
  std::vector<std::size_t> leg_segment; // boundary segment index per leg
  int phase = 0;                        // checkerboard phase
};

int cell_color(Coord cell, int phase) {
  long long c = (cell.first + cell.second + phase) % 2;
  return int((c + 2) % 2);
}

KtcShape ktc_shape(const std::vector<int>& seq, std::size_t w, std::size_t h) {
  KtcShape shape;
  long long ww = (long long)w, hh = (long long)h;
  if (seq.size() == 4) {
    if (w < 1 || h < 1)
      throw Error(ErrorKind::ConstraintViolation, "KTC rectangle patch needs w >= 1 and h >= 1",
                  "{\"w\":" + std::to_string(w) + ",\"h\":" + std::to_string(h) + "}");
    for (long long y = 0; y < hh; ++y)
      for (long long x = 0; x < ww; ++x) shape.cells.insert({x, y});
    shape.corner_path = {{0, 0}, {ww, 0}, {ww, hh}, {0, hh}};
    shape.leg_segment = {0, 1, 2, 3};
    shape.phase = seq[0];
    return shape;
  }
  // Six segments: a w x 1 bar with one stem cell on top of its second
  // column.  The two reflex corners force the stem flank colors, so the
  // checkerboard phase must equal the color of the segment that wraps the
  // bar top into the stem side (segments 2 and 4, which an alternating
  // two-color sequence makes equal automatically).
  if (w < 3 || h != 1)
    throw Error(ErrorKind::ConstraintViolation,
                "six-segment KTC patch needs w >= 3 and h == 1",
                "{\"w\":" + std::to_string(w) + ",\"h\":" + std::to_string(h) + "}");
  if (seq[2] != seq[4])
    throw Error(ErrorKind::InvalidBoundarySpec,
                "six-segment KTC patch needs equal colors on segments 2 and 4",
                "{\"segment2\":" + std::to_string(seq[2]) + ",\"segment4\":" +
                    std::to_string(seq[4]) + "}");
  for (long long x = 0; x < ww; ++x) shape.cells.insert({x, 0});
  shape.cells.insert({1, 1});
  shape.corner_path = {{0, 0}, {ww, 0}, {ww, 1}, {2, 1}, {2, 2}, {1, 2}, {1, 1}, {0, 1}};
  shape.leg_segment = {0, 1, 2, 2, 3, 4, 4, 5};
  shape.phase = seq[2];
  return shape;
}

// The grid cell a boundary edge borders.
Coord flank_cell(const std::set<Coord>& cells, Coord u, Coord v) {
  if (u > v) std::swap(u, v);
  Coord inside;
  if (u.second == v.second)
    inside = cells.count(u) ? u : Coord{u.first, u.second - 1};
  else
    inside = cells.count(u) ? u : Coord{u.first - 1, u.second};
  if (!cells.count(inside))
    throw Error(ErrorKind::ValidationError, "internal patch construction lost a boundary cell",
                "{\"edge_from\":" + coord_json(u) + "}");
  return inside;
}

BoundaryPatch build_ktc_patch(const std::vector<int>& seq, std::size_t w, std::size_t h) {
  if (seq.size() % 2 != 0)
    throw Error(ErrorKind::InvalidBoundarySpec,
                "a two-color boundary needs an even segment count",
                "{\"segments\":" + std::to_string(seq.size()) + "}");
  validate_sequence(seq, 2, "KTC");
  if (seq.size() != 4 && seq.size() != 6)
    throw Error(ErrorKind::InvalidBoundarySpec, "KTC patches support 4 or 6 boundary segments",
                "{\"segments\":" + std::to_string(seq.size()) + "}");
  KtcShape shape = ktc_shape(seq, w, h);

  // Grid vertices are the cell corners; edges are the cell sides.
  std::map<Coord, std::size_t> vertex_id;
  for (Coord cell : shape.cells)
    for (long long dx = 0; dx <= 1; ++dx)
      for (long long dy = 0; dy <= 1; ++dy)
        vertex_id.insert({{cell.first + dx, cell.second + dy}, 0});
  MapBuilder builder;
  for (auto& [coord, id] : vertex_id) id = builder.add_vertex();

  auto has_edge = [&](Coord u, Coord v) {
    if (!vertex_id.count(u) || !vertex_id.count(v)) return false;
    if (u.second == v.second)
      return shape.cells.count(u) > 0 || shape.cells.count({u.first, u.second - 1}) > 0;
    return shape.cells.count(u) > 0 || shape.cells.count({u.first - 1, u.second}) > 0;
  };
  DartTable darts;
  for (const auto& [coord, id] : vertex_id) {
    for (Coord step : {Coord{1, 0}, Coord{0, 1}}) {  // east edge, then north edge
      Coord other = coord + step;
      if (!has_edge(coord, other)) continue;
      auto [du, dv] = builder.add_edge(id, vertex_id.at(other));
      darts.dart[{coord, other}] = du;
      darts.dart[{other, coord}] = dv;
    }
  }
  const Coord kDirs[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};  // E, N, W, S
  for (const auto& [coord, id] : vertex_id) {
    std::vector<Dart> order;
    for (Coord d : kDirs)
      if (darts.dart.count({coord, coord + d})) order.push_back(darts.at(coord, coord + d));
    builder.set_rotation(id, order);
  }
  CombinatorialMap grid = builder.build({}, false);

  // With counterclockwise rotations a dart borders the face on its right, so
  // the leftward dart of a cell's bottom edge lies on the cell itself.
  std::map<Coord, std::size_t> grid_cell_face;
  for (Coord cell : shape.cells)
    grid_cell_face[cell] = grid.face_of(darts.at(cell + Coord{1, 0}, cell));

  // Walk the boundary counterclockwise and insert a 2-gon wherever the
  // segment color differs from the flanking cell color.
  std::vector<Dart> alpha = grid.alpha_perm();
  std::vector<Dart> sigma = grid.sigma_perm();
  std::vector<Dart> sigma_inv(sigma.size());
  for (Dart d = 0; d < sigma.size(); ++d) sigma_inv[sigma[d]] = d;

  std::vector<std::pair<Dart, int>> two_gons;  // (outer dart of the ring edge, color)
  std::size_t legs = shape.corner_path.size();
  for (std::size_t leg = 0; leg < legs; ++leg) {
    Coord from = shape.corner_path[leg];
    Coord to = shape.corner_path[(leg + 1) % legs];
    Coord delta = to - from;
    long long steps = std::max(std::llabs(delta.first), std::llabs(delta.second));
    Coord unit = {delta.first / steps, delta.second / steps};
    int color = seq[shape.leg_segment[leg]];
    Coord cur = from;
    for (long long i = 0; i < steps; ++i, cur = cur + unit) {
      Coord next = cur + unit;
      Coord cell = flank_cell(shape.cells, cur, next);
      if (cell_color(cell, shape.phase) == color) continue;
      Dart fwd = darts.at(cur, next), bwd = darts.at(next, cur);
      Dart ring = grid.face_of(fwd) == grid_cell_face.at(cell) ? bwd : fwd;  // outer side
      // Parallel edge (a2 at ring's vertex just before it, b2 across): the
      // face through `ring` pinches off as the 2-gon {ring, b2} while the
      // outer face re-routes through a2 at unchanged length.
      Dart partner = alpha[ring];
      Dart prev = sigma_inv[ring], after = sigma[partner];
      Dart a2 = Dart(alpha.size()), b2 = Dart(alpha.size() + 1);
      alpha.push_back(b2);
      alpha.push_back(a2);
      sigma.resize(sigma.size() + 2);
      sigma_inv.resize(sigma_inv.size() + 2);
      sigma[prev] = a2;
      sigma[a2] = ring;
      sigma_inv[ring] = a2;
      sigma_inv[a2] = prev;
      sigma[partner] = b2;
      sigma[b2] = after;
      sigma_inv[after] = b2;
      sigma_inv[b2] = partner;
      two_gons.push_back({ring, color});
    }
  }

  std::map<std::string, std::string> meta = {{"family", "ktc_patch"},
                                             {"w", std::to_string(w)},
                                             {"h", std::to_string(h)},
                                             {"segments", std::to_string(seq.size())}};
  CombinatorialMap map = CombinatorialMap::build(std::move(alpha), std::move(sigma), meta);

  BoundaryPatch patch;
  std::set<std::size_t> used_faces;
  for (Coord cell : shape.cells) {
    std::size_t face = map.face_of(darts.at(cell + Coord{1, 0}, cell));
    if (map.face_length(face) != 4)
      throw Error(ErrorKind::ValidationError, "internal patch construction broke a cell face",
                  "{\"face\":" + std::to_string(face) + "}");
    char letter = cell_color(cell, shape.phase) == 0 ? 'X' : 'Z';
    patch.code.faces.push_back({face, {std::string(4, letter)}});
    used_faces.insert(face);
  }
  for (auto [ring, color] : two_gons) {
    std::size_t face = map.face_of(ring);
    if (map.face_length(face) != 2)
      throw Error(ErrorKind::ValidationError, "internal patch construction broke a 2-gon",
                  "{\"face\":" + std::to_string(face) + "}");
    patch.code.faces.push_back({face, {std::string(2, color == 0 ? 'X' : 'Z')}});
    used_faces.insert(face);
  }
  if (used_faces.size() + 1 != map.face_count())
    throw Error(ErrorKind::ValidationError, "internal patch construction lost the outer face");
  for (std::size_t f = 0; f < map.face_count(); ++f)
    if (!used_faces.count(f)) patch.outer_face = f;

  auto profile = map.valence_profile();
  for (const auto& [valence, count] : profile)
    if (valence != 3 && valence != 4)
      throw Error(ErrorKind::ValidationError, "KTC patch grew a vertex outside valence 3..4",
                  "{\"valence\":" + std::to_string(valence) + "}");
  patch.three_valent_count = profile.count(3) ? profile.at(3) : 0;
  if (patch.three_valent_count != seq.size())
    throw Error(ErrorKind::ValidationError,
                "KTC patch corner count disagrees with the boundary sequence",
                "{\"three_valent\":" + std::to_string(patch.three_valent_count) +
                    ",\"segments\":" + std::to_string(seq.size()) + "}");
  std::sort(patch.code.faces.begin(), patch.code.faces.end(),
            [](const FaceGenerators& a, const FaceGenerators& b) { return a.face < b.face; });
  patch.code.map = std::move(map);
  patch.code.family = "KTC-patch";
  patch.family = "KTC";
  patch.segment_colors = seq;
  patch.boundary_runs = seq.size();
  return patch;
}

// ---------------------------------------------------------------------------
// TCC patches.

// Pointy-top hexagon corner offsets around a cell center, counterclockwise
// from the top.  Centers sit at (2a + b, 3b), which makes every corner an
// exact lattice point shared by up to three cells.
const Coord kHexOffsets[6] = {{0, 2}, {-1, 1}, {-1, -1}, {0, -2}, {1, -1}, {1, 1}};

Coord hex_center(Coord cell) { return {2 * cell.first + cell.second, 3 * cell.second}; }

// Triangular patch with `side` segments per side: hexagonal cells with
// a + b <= side, the three extreme hexes trimmed to quadrilaterals by merging
// their three private corners into one 2-valent vertex.
BoundaryPatch build_tcc_triangle(const std::vector<int>& seq, std::size_t side) {
  long long s = (long long)side;
  std::vector<Coord> cells;
  for (long long b = 0; b <= s; ++b)
    for (long long a = 0; a + b <= s; ++a) cells.push_back({a, b});

  std::map<Coord, std::vector<Coord>> cycles;  // cell -> corner cycle
  std::map<Coord, int> corner_uses;
  for (Coord cell : cells) {
    std::vector<Coord>& cycle = cycles[cell];
    for (Coord off : kHexOffsets) cycle.push_back(hex_center(cell) + off);
    for (Coord corner : cycle) ++corner_uses[corner];
  }

  for (Coord corner_cell : {Coord{0, 0}, Coord{s, 0}, Coord{0, s}}) {
    std::vector<Coord>& cycle = cycles[corner_cell];
    auto is_private = [&](std::size_t i) { return corner_uses.at(cycle[i]) == 1; };
    std::size_t start = 6;
    for (std::size_t i = 0; i < 6; ++i)
      if (is_private(i) && !is_private((i + 5) % 6)) start = i;
    if (start == 6 || !is_private((start + 1) % 6) || !is_private((start + 2) % 6) ||
        is_private((start + 3) % 6))
      throw Error(ErrorKind::ValidationError,
                  "internal patch construction found no trimmable corner run",
                  "{\"cell\":" + coord_json(corner_cell) + "}");
    // Drop the outer two private corners; the middle one becomes the
    // merged 2-valent vertex.
    std::vector<Coord> trimmed;
    for (std::size_t i = 0; i < 6; ++i)
      if (i != start && i != (start + 2) % 6) trimmed.push_back(cycle[i]);
    cycle = std::move(trimmed);
  }

  // Vertices, then edges from consecutive cycle corners.
  std::map<Coord, std::size_t> vertex_id;
  for (const auto& [cell, cycle] : cycles)
    for (Coord corner : cycle) vertex_id.insert({corner, 0});
  MapBuilder builder;
  for (auto& [coord, id] : vertex_id) id = builder.add_vertex();

  std::set<std::pair<Coord, Coord>> edges;
  for (const auto& [cell, cycle] : cycles)
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Coord u = cycle[i], v = cycle[(i + 1) % cycle.size()];
      edges.insert({std::min(u, v), std::max(u, v)});
    }
  DartTable darts;
  for (const auto& [u, v] : edges) {
    auto [du, dv] = builder.add_edge(vertex_id.at(u), vertex_id.at(v));
    darts.dart[{u, v}] = du;
    darts.dart[{v, u}] = dv;
  }
  std::map<Coord, std::vector<Coord>> neighbors;
  for (const auto& [u, v] : edges) {
    neighbors[u].push_back(v);
    neighbors[v].push_back(u);
  }
  for (auto& [coord, around] : neighbors) {
    Coord at = coord;
    std::sort(around.begin(), around.end(),
              [at](Coord a, Coord b) { return ccw_less(a - at, b - at); });
    std::vector<Dart> order;
    for (Coord other : around) order.push_back(darts.at(at, other));
    builder.set_rotation(vertex_id.at(coord), order);
  }
  std::map<std::string, std::string> meta = {{"family", "tcc_patch"},
                                             {"side", std::to_string(side)},
                                             {"segments", std::to_string(seq.size())}};
  CombinatorialMap map = builder.build(meta);

  BoundaryPatch patch;
  std::set<std::size_t> used_faces;
  for (Coord cell : cells) {
    // The corner cycle is counterclockwise, so the reversed first edge dart
    // borders the cell (faces lie on a dart's right).
    const std::vector<Coord>& cycle = cycles.at(cell);
    std::size_t face = map.face_of(darts.at(cycle[1], cycle[0]));
    if (map.face_length(face) != cycle.size())
      throw Error(ErrorKind::ValidationError, "internal patch construction broke a cell face",
                  "{\"cell\":" + coord_json(cell) + "}");
    patch.code.faces.push_back(
        {face, {std::string(cycle.size(), 'X'), std::string(cycle.size(), 'Z')}});
    used_faces.insert(face);
  }
  if (used_faces.size() + 1 != map.face_count())
    throw Error(ErrorKind::ValidationError, "internal patch construction lost the outer face");
  for (std::size_t f = 0; f < map.face_count(); ++f)
    if (!used_faces.count(f)) patch.outer_face = f;

  auto profile = map.valence_profile();
  for (const auto& [valence, count] : profile)
    if (valence != 2 && valence != 3)
      throw Error(ErrorKind::ValidationError, "TCC patch grew a vertex outside valence 2..3",
                  "{\"valence\":" + std::to_string(valence) + "}");
  patch.two_valent_count = profile.count(2) ? profile.at(2) : 0;
  patch.three_valent_count = profile.count(3) ? profile.at(3) : 0;
  if (patch.two_valent_count != seq.size())
    throw Error(ErrorKind::ValidationError,
                "TCC patch corner count disagrees with the boundary sequence",
                "{\"two_valent\":" + std::to_string(patch.two_valent_count) +
                    ",\"segments\":" + std::to_string(seq.size()) + "}");
  std::sort(patch.code.faces.begin(), patch.code.faces.end(),
            [](const FaceGenerators& a, const FaceGenerators& b) { return a.face < b.face; });
  patch.code.map = std::move(map);
  patch.code.family = "TCC-patch";
  patch.family = "TCC";
  patch.segment_colors = seq;
  patch.boundary_runs = seq.size();
  return patch;
}

// Two fused square cells: the smallest TCC patch with four boundary
// segments.
BoundaryPatch build_tcc_domino(const std::vector<int>& seq) {
  MapBuilder builder;
  std::vector<std::size_t> v(6);
  for (auto& id : v) id = builder.add_vertex();  // (0,0) (1,0) (2,0) (0,1) (1,1) (2,1)
  auto edge = [&](std::size_t a, std::size_t b) { return builder.add_edge(a, b); };
  auto [e01a, e01b] = edge(0, 1);
  auto [e12a, e12b] = edge(1, 2);
  auto [e34a, e34b] = edge(3, 4);
  auto [e45a, e45b] = edge(4, 5);
  auto [e03a, e03b] = edge(0, 3);
  auto [e14a, e14b] = edge(1, 4);
  auto [e25a, e25b] = edge(2, 5);
  builder.set_rotation(0, {e01a, e03a});
  builder.set_rotation(1, {e12a, e14a, e01b});
  builder.set_rotation(2, {e25a, e12b});
  builder.set_rotation(3, {e34a, e03b});
  builder.set_rotation(4, {e45a, e34b, e14b});
  builder.set_rotation(5, {e45b, e25b});
  CombinatorialMap map = builder.build({{"family", "tcc_patch"}, {"shape", "domino"}});

  BoundaryPatch patch;
  std::size_t left = map.face_of(e01b), right = map.face_of(e12b);
  for (std::size_t face : {std::min(left, right), std::max(left, right)})
    patch.code.faces.push_back({face, {"XXXX", "ZZZZ"}});
  for (std::size_t f = 0; f < map.face_count(); ++f)
    if (f != left && f != right) patch.outer_face = f;
  auto profile = map.valence_profile();
  patch.two_valent_count = profile.at(2);
  patch.three_valent_count = profile.at(3);
  patch.code.map = std::move(map);
  patch.code.family = "TCC-patch";
  patch.family = "TCC";
  patch.segment_colors = seq;
  patch.boundary_runs = seq.size();
  return patch;
}

}  // namespace

BoundaryPatch build_boundary_patch(const std::string& family, const std::vector<int>& seq,
                                   std::size_t size_a, std::size_t size_b) {
  if (family == "KTC") return build_ktc_patch(seq, size_a, size_b);
  if (family == "TCC") {
    validate_sequence(seq, 3, "TCC");
    if (seq.size() == 4) return build_tcc_domino(seq);
    if (seq.size() % 3 == 0 && !seq.empty()) {
      std::size_t side = seq.size() / 3;
      if (size_a != side)
        throw Error(ErrorKind::InvalidBoundarySpec,
                    "TCC triangle size disagrees with the boundary sequence",
                    "{\"size\":" + std::to_string(size_a) + ",\"segments\":" +
                        std::to_string(seq.size()) + "}");
      return build_tcc_triangle(seq, side);
    }
    throw Error(ErrorKind::InvalidBoundarySpec,
                "TCC patches support 4 or 3k boundary segments",
                "{\"segments\":" + std::to_string(seq.size()) + "}");
  }
  throw Error(ErrorKind::InvalidBoundarySpec, "unknown patch family \"" + family + "\"",
              "{\"family\":\"" + family + "\"}");
}

BoundaryCount boundary_logical_count(const BoundaryPatch& patch) {
  std::vector<PauliWord> gens = code_generators(patch.code);
  CodeParams params = stabilizer_params(gens, patch.code.qubit_count());
  BoundaryCount count;
  count.from_rank = params.k;
  if (patch.family == "KTC") {
    if (patch.three_valent_count < 2 || patch.three_valent_count % 2 != 0 ||
        patch.boundary_runs < 2 || patch.boundary_runs % 2 != 0)
      throw Error(ErrorKind::ValidationError,
                  "KTC patch corner counts must be even and at least 2",
                  "{\"three_valent\":" + std::to_string(patch.three_valent_count) +
                      ",\"runs\":" + std::to_string(patch.boundary_runs) + "}");
    count.from_vertex_formula = patch.three_valent_count / 2 - 1;
    count.from_boundary_formula = patch.boundary_runs / 2 - 1;
  } else if (patch.family == "TCC") {
    if (patch.two_valent_count < 2 || patch.boundary_runs < 2)
      throw Error(ErrorKind::ValidationError, "TCC patch needs at least two boundary corners",
                  "{\"two_valent\":" + std::to_string(patch.two_valent_count) + "}");
    count.from_vertex_formula = patch.two_valent_count - 2;
    count.from_boundary_formula = patch.boundary_runs - 2;
  } else {
    throw Error(ErrorKind::ValidationError, "unknown patch family \"" + patch.family + "\"");
  }
  if (count.from_vertex_formula != count.from_rank ||
      count.from_boundary_formula != count.from_rank)
    throw Error(ErrorKind::ValidationError, "boundary logical counts disagree",
                "{\"from_rank\":" + std::to_string(count.from_rank) + ",\"from_vertex\":" +
                    std::to_string(count.from_vertex_formula) + ",\"from_boundary\":" +
                    std::to_string(count.from_boundary_formula) + "}");
  count.k = count.from_rank;
  return count;
}

}  // namespace homcode
