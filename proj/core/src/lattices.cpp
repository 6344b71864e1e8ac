#include "homcode/lattices.hpp"

#include <algorithm>

#include "homcode/boundary.hpp"
#include "homcode/error.hpp"

namespace homcode {

LatticeSpec parse_lattice_spec(const std::string& text) {
  LatticeSpec spec;
  std::size_t colon = text.find(':');
  spec.family = text.substr(0, colon);
  if (spec.family.empty())
    throw Error(ErrorKind::ParseError, "lattice spec needs a family name");
  if (colon == std::string::npos) return spec;
  std::string rest = text.substr(colon + 1);
  std::size_t start = 0;
  while (start <= rest.size()) {
    std::size_t comma = rest.find(',', start);
    std::string item = rest.substr(start, comma == std::string::npos ? std::string::npos
                                                                     : comma - start);
    if (item.empty())
      throw Error(ErrorKind::ParseError, "empty parameter in lattice spec \"" + text + "\"");
    std::size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
      throw Error(ErrorKind::ParseError,
                  "lattice parameter must look like key=value, got \"" + item + "\"");
    std::string key = item.substr(0, eq);
    std::string value = item.substr(eq + 1);
    try {
      std::size_t used = 0;
      long long parsed = std::stoll(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
      if (spec.params.count(key))
        throw Error(ErrorKind::ParseError, "duplicate lattice parameter \"" + key + "\"");
      spec.params[key] = parsed;
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "lattice parameter \"" + key +
                                             "\" needs an integer value, got \"" + value + "\"");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return spec;
}

namespace {

long long require_param(const LatticeSpec& spec, const std::string& key) {
  auto it = spec.params.find(key);
  if (it == spec.params.end())
    throw Error(ErrorKind::ParseError,
                "lattice family " + spec.family + " needs parameter \"" + key + "\"");
  return it->second;
}

void reject_unknown_params(const LatticeSpec& spec, std::initializer_list<const char*> known) {
  for (const auto& [key, value] : spec.params) {
    if (std::find_if(known.begin(), known.end(),
                     [&](const char* k) { return key == k; }) == known.end())
      throw Error(ErrorKind::ParseError,
                  "unknown parameter \"" + key + "\" for family " + spec.family);
  }
}

std::map<std::string, std::string> family_meta(const LatticeSpec& spec) {
  std::map<std::string, std::string> meta{{"family", spec.family}};
  for (const auto& [key, value] : spec.params) meta[key] = std::to_string(value);
  return meta;
}

// Square torus: vertex (x, y) has id y*L + x; its darts are 4*id + direction
// with directions 0:east 1:north 2:west 3:south, rotation in that cyclic
// order.
CombinatorialMap square_torus(const LatticeSpec& spec) {
  long long L = require_param(spec, "L");
  reject_unknown_params(spec, {"L"});
  if (L < 2 || L % 2 != 0)
    throw Error(ErrorKind::ConstraintViolation,
                "square_torus needs an even L >= 2 (odd tori are not 2-face-colorable)",
                "{\"L\":" + std::to_string(L) + "}");
  std::size_t n = std::size_t(L);
  std::vector<Dart> alpha(4 * n * n), sigma(4 * n * n);
  auto dart = [&](std::size_t x, std::size_t y, std::size_t dir) {
    return Dart(4 * (y * n + x) + dir);
  };
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t dir = 0; dir < 4; ++dir) {
        sigma[dart(x, y, dir)] = dart(x, y, (dir + 1) % 4);
        switch (dir) {
          case 0: alpha[dart(x, y, 0)] = dart((x + 1) % n, y, 2); break;
          case 2: alpha[dart(x, y, 2)] = dart((x + n - 1) % n, y, 0); break;
          case 1: alpha[dart(x, y, 1)] = dart(x, (y + 1) % n, 3); break;
          case 3: alpha[dart(x, y, 3)] = dart(x, (y + n - 1) % n, 1); break;
        }
      }
  return CombinatorialMap::build(std::move(alpha), std::move(sigma), family_meta(spec));
}

// Hexagonal torus on two triangular sublattices: vertex A(i,j) = 2*(j*a + i)
// and B(i,j) = A(i,j) + 1.  B(i,j) connects to A(i,j), A(i+1,j), A(i,j+1) in
// that rotation order; A(i,j) sees B(i,j), B(i-1,j), B(i,j-1).
CombinatorialMap hex_torus(const LatticeSpec& spec) {
  long long a = require_param(spec, "a"), b = require_param(spec, "b");
  reject_unknown_params(spec, {"a", "b"});
  if (a < 3 || b < 3 || a % 3 != 0 || b % 3 != 0)
    throw Error(ErrorKind::ConstraintViolation,
                "hex_torus needs a and b to be positive multiples of 3 "
                "(3-face-colorability of the wrapped lattice)",
                "{\"a\":" + std::to_string(a) + ",\"b\":" + std::to_string(b) + "}");
  std::size_t A = std::size_t(a), B = std::size_t(b);
  MapBuilder builder;
  for (std::size_t v = 0; v < 2 * A * B; ++v) builder.add_vertex();
  auto vert_a = [&](std::size_t i, std::size_t j) { return 2 * (j * A + i); };
  auto vert_b = [&](std::size_t i, std::size_t j) { return 2 * (j * A + i) + 1; };
  // to_a[edge kind][j][i]: darts leaving B; from_b: darts leaving A.
  std::vector<std::array<Dart, 3>> b_darts(A * B), a_darts(A * B);
  for (std::size_t j = 0; j < B; ++j)
    for (std::size_t i = 0; i < A; ++i) {
      std::size_t cell = j * A + i;
      auto [d0, r0] = builder.add_edge(vert_b(i, j), vert_a(i, j));
      auto [d1, r1] = builder.add_edge(vert_b(i, j), vert_a((i + 1) % A, j));
      auto [d2, r2] = builder.add_edge(vert_b(i, j), vert_a(i, (j + 1) % B));
      b_darts[cell] = {d0, d1, d2};
      a_darts[j * A + i][0] = r0;
      a_darts[j * A + (i + 1) % A][1] = r1;
      a_darts[((j + 1) % B) * A + i][2] = r2;
    }
  for (std::size_t j = 0; j < B; ++j)
    for (std::size_t i = 0; i < A; ++i) {
      std::size_t cell = j * A + i;
      builder.set_rotation(vert_b(i, j), {b_darts[cell][0], b_darts[cell][1], b_darts[cell][2]});
      builder.set_rotation(vert_a(i, j), {a_darts[cell][0], a_darts[cell][1], a_darts[cell][2]});
    }
  return builder.build(family_meta(spec));
}

// Square-octagon torus: each cell (x, y) holds a diamond with vertices
// 4*(y*a + x) + {0:N, 1:E, 2:S, 3:W}; diamonds are joined east (E to the next
// W) and north (N to the next S).  Faces come out as ab squares and ab
// octagons.
CombinatorialMap torus_488(const LatticeSpec& spec) {
  long long a = require_param(spec, "a"), b = require_param(spec, "b");
  reject_unknown_params(spec, {"a", "b"});
  if (a < 2 || b < 2 || a % 2 != 0 || b % 2 != 0)
    throw Error(ErrorKind::ConstraintViolation,
                "torus_488 needs even a and b >= 2 (octagon checkerboard wraps)",
                "{\"a\":" + std::to_string(a) + ",\"b\":" + std::to_string(b) + "}");
  std::size_t A = std::size_t(a), B = std::size_t(b);
  MapBuilder builder;
  for (std::size_t v = 0; v < 4 * A * B; ++v) builder.add_vertex();
  enum { N = 0, E = 1, S = 2, W = 3 };
  auto vert = [&](std::size_t x, std::size_t y, int corner) {
    return 4 * (y * A + x) + std::size_t(corner);
  };
  struct CellDarts {
    Dart ne_n, ne_e;  // edge N-E seen from N, from E
    Dart es_e, es_s;
    Dart sw_s, sw_w;
    Dart wn_w, wn_n;
    Dart east_e, east_w;    // connector E(x,y) - W(x+1,y)
    Dart north_n, north_s;  // connector N(x,y) - S(x,y+1)
  };
  std::vector<CellDarts> cd(A * B);
  for (std::size_t y = 0; y < B; ++y)
    for (std::size_t x = 0; x < A; ++x) {
      CellDarts& c = cd[y * A + x];
      std::tie(c.ne_n, c.ne_e) = builder.add_edge(vert(x, y, N), vert(x, y, E));
      std::tie(c.es_e, c.es_s) = builder.add_edge(vert(x, y, E), vert(x, y, S));
      std::tie(c.sw_s, c.sw_w) = builder.add_edge(vert(x, y, S), vert(x, y, W));
      std::tie(c.wn_w, c.wn_n) = builder.add_edge(vert(x, y, W), vert(x, y, N));
      std::tie(c.east_e, c.east_w) =
          builder.add_edge(vert(x, y, E), vert((x + 1) % A, y, W));
      std::tie(c.north_n, c.north_s) =
          builder.add_edge(vert(x, y, N), vert(x, (y + 1) % B, S));
    }
  for (std::size_t y = 0; y < B; ++y)
    for (std::size_t x = 0; x < A; ++x) {
      const CellDarts& c = cd[y * A + x];
      const CellDarts& west = cd[y * A + (x + A - 1) % A];
      const CellDarts& south = cd[((y + B - 1) % B) * A + x];
      // Rotations counterclockwise in the flat embedding of the diamond.
      builder.set_rotation(vert(x, y, N), {c.north_n, c.wn_n, c.ne_n});
      builder.set_rotation(vert(x, y, E), {c.east_e, c.ne_e, c.es_e});
      builder.set_rotation(vert(x, y, S), {c.es_s, c.sw_s, south.north_s});
      builder.set_rotation(vert(x, y, W), {c.wn_w, west.east_w, c.sw_w});
    }
  return builder.build(family_meta(spec));
}

// Square torus with every other vertical strut removed: vertical edges
// ((x, j), (x, j+1)) with odd x and odd j are dropped, leaving 4-valent even
// columns and 3-valent odd columns; the faces are squares and hexagons.
CombinatorialMap mixed_strip(const LatticeSpec& spec) {
  long long w = require_param(spec, "w"), h = require_param(spec, "h");
  reject_unknown_params(spec, {"w", "h"});
  if (w < 2 || h < 2 || w % 2 != 0 || h % 2 != 0)
    throw Error(ErrorKind::ConstraintViolation, "mixed_strip needs even w and h >= 2",
                "{\"w\":" + std::to_string(w) + ",\"h\":" + std::to_string(h) + "}");
  std::size_t W = std::size_t(w), H = std::size_t(h);
  MapBuilder builder;
  for (std::size_t v = 0; v < W * H; ++v) builder.add_vertex();
  auto vert = [&](std::size_t x, std::size_t y) { return y * W + x; };
  std::vector<Dart> east(W * H), west(W * H);
  std::vector<Dart> north(W * H, 0), south(W * H, 0);
  std::vector<bool> has_north(W * H, false), has_south(W * H, false);
  for (std::size_t y = 0; y < H; ++y)
    for (std::size_t x = 0; x < W; ++x) {
      auto [de, dw] = builder.add_edge(vert(x, y), vert((x + 1) % W, y));
      east[vert(x, y)] = de;
      west[vert((x + 1) % W, y)] = dw;
    }
  for (std::size_t y = 0; y < H; ++y)
    for (std::size_t x = 0; x < W; ++x) {
      if (x % 2 == 1 && y % 2 == 1) continue;
      auto [dn, ds] = builder.add_edge(vert(x, y), vert(x, (y + 1) % H));
      north[vert(x, y)] = dn;
      has_north[vert(x, y)] = true;
      south[vert(x, (y + 1) % H)] = ds;
      has_south[vert(x, (y + 1) % H)] = true;
    }
  for (std::size_t y = 0; y < H; ++y)
    for (std::size_t x = 0; x < W; ++x) {
      std::size_t v = vert(x, y);
      std::vector<Dart> order{east[v]};
      if (has_north[v]) order.push_back(north[v]);
      order.push_back(west[v]);
      if (has_south[v]) order.push_back(south[v]);
      builder.set_rotation(v, order);
    }
  return builder.build(family_meta(spec));
}

}  // namespace

CombinatorialMap generate(const LatticeSpec& spec) {
  if (spec.family == "square_torus") return square_torus(spec);
  if (spec.family == "hex_torus") return hex_torus(spec);
  if (spec.family == "torus_488") return torus_488(spec);
  if (spec.family == "mixed_strip") return mixed_strip(spec);
  if (spec.family == "planar_ktc_patch") {
    long long w = require_param(spec, "w"), h = require_param(spec, "h");
    long long boundaries = spec.params.count("boundaries") ? spec.params.at("boundaries") : 4;
    reject_unknown_params(spec, {"w", "h", "boundaries"});
    if (boundaries != 4 && boundaries != 6)
      throw Error(ErrorKind::ConstraintViolation,
                  "planar_ktc_patch supports 4 or 6 boundary segments",
                  "{\"boundaries\":" + std::to_string(boundaries) + "}");
    std::vector<int> seq;
    for (long long i = 0; i < boundaries; ++i) seq.push_back(int(i % 2));
    BoundaryPatch patch = build_boundary_patch("KTC", seq, std::size_t(w), std::size_t(h));
    CombinatorialMap map = patch.code.map;
    for (const auto& [key, value] : family_meta(spec)) map.set_meta(key, value);
    return map;
  }
  if (spec.family == "planar_tcc_triangle") {
    long long s = require_param(spec, "s");
    reject_unknown_params(spec, {"s"});
    if (s < 1)
      throw Error(ErrorKind::ConstraintViolation, "planar_tcc_triangle needs s >= 1",
                  "{\"s\":" + std::to_string(s) + "}");
    std::vector<int> seq;
    for (long long i = 0; i < 3 * s; ++i) seq.push_back(int(i % 3));
    BoundaryPatch patch = build_boundary_patch("TCC", seq, std::size_t(s), 0);
    CombinatorialMap map = patch.code.map;
    for (const auto& [key, value] : family_meta(spec)) map.set_meta(key, value);
    return map;
  }
  throw Error(ErrorKind::ParseError, "unknown lattice family \"" + spec.family + "\"");
}

CombinatorialMap generate(const std::string& spec_text) {
  return generate(parse_lattice_spec(spec_text));
}

}  // namespace homcode
