#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace homcode {

using Dart = std::uint32_t;

// Graph embedded in a closed orientable surface, encoded as a rotation
// system: `sigma` cycles the darts counterclockwise around each vertex,
// `alpha` swaps the two darts of every edge.  Faces are the orbits of
// phi(d) = sigma(alpha(d)); that convention is fixed once here and used by
// every transform.  Orbit ids (vertex, edge, face) are assigned in order of
// each orbit's minimal dart, so all derived numbering is deterministic.
class CombinatorialMap {
 public:
  CombinatorialMap() = default;

  // Validates and freezes a map.  Errors: NotPermutation, OddDartCount,
  // NotInvolution, FixedPointEdge, Disconnected (suppressed by
  // allow_disconnected).
  static CombinatorialMap build(std::vector<Dart> alpha, std::vector<Dart> sigma,
                                std::map<std::string, std::string> meta = {},
                                bool allow_disconnected = false);

  std::size_t dart_count() const { return alpha_.size(); }
  Dart alpha(Dart d) const { return alpha_[d]; }
  Dart sigma(Dart d) const { return sigma_[d]; }
  Dart sigma_inv(Dart d) const { return sigma_inv_[d]; }
  Dart phi(Dart d) const { return sigma_[alpha_[d]]; }

  const std::vector<Dart>& alpha_perm() const { return alpha_; }
  const std::vector<Dart>& sigma_perm() const { return sigma_; }

  std::size_t vertex_count() const { return vertex_cycles_.size(); }
  std::size_t edge_count() const { return edge_darts_.size(); }
  std::size_t face_count() const { return face_cycles_.size(); }

  std::size_t vertex_of(Dart d) const { return vertex_of_[d]; }
  std::size_t edge_of(Dart d) const { return edge_of_[d]; }
  std::size_t face_of(Dart d) const { return face_of_[d]; }

  // Orbit cycles in traversal order, each starting at its minimal dart.
  const std::vector<std::vector<Dart>>& vertex_cycles() const { return vertex_cycles_; }
  const std::vector<std::vector<Dart>>& face_cycles() const { return face_cycles_; }
  // Edge i as its dart pair (d, alpha(d)) with d the smaller dart.
  const std::vector<std::pair<Dart, Dart>>& edge_darts() const { return edge_darts_; }

  std::size_t valence(std::size_t vertex) const { return vertex_cycles_[vertex].size(); }
  std::size_t face_length(std::size_t face) const { return face_cycles_[face].size(); }

  // Endpoint vertices of edge e (equal for a self-loop).
  std::pair<std::size_t, std::size_t> edge_endpoints(std::size_t e) const {
    return {vertex_of_[edge_darts_[e].first], vertex_of_[edge_darts_[e].second]};
  }

  // Count of vertices per valence, i.e. the |V_1|, |V_2|, ... profile.
  std::map<std::size_t, std::size_t> valence_profile() const;
  // All vertices share one valence?  Returns it, or 0 when mixed or empty.
  std::size_t uniform_valence() const;

  bool connected() const { return connected_; }
  // No self-loops and no parallel edges.
  bool is_simple() const;

  const std::map<std::string, std::string>& meta() const { return meta_; }
  void set_meta(const std::string& key, const std::string& value) { meta_[key] = value; }

 private:
  std::vector<Dart> alpha_, sigma_, sigma_inv_;
  std::vector<std::size_t> vertex_of_, edge_of_, face_of_;
  std::vector<std::vector<Dart>> vertex_cycles_, face_cycles_;
  std::vector<std::pair<Dart, Dart>> edge_darts_;
  bool connected_ = true;
  std::map<std::string, std::string> meta_;
};

struct EulerGenus {
  long long chi = 0;
  std::size_t genus = 0;
};

// chi = |V| - |E| + |F|, genus = (2 - chi) / 2.  Errors: Disconnected on a
// multi-component map, DegenerateParameters on an empty one.
EulerGenus euler_genus(const CombinatorialMap& map);

// Incremental construction from vertices, edges and per-vertex rotation
// orders.  Dart ids are allocated in add_edge call order (2 per edge); the
// rotation at a vertex defaults to dart insertion order.
class MapBuilder {
 public:
  std::size_t add_vertex();
  // Returns the new darts (at u, at v).  u == v makes a self-loop.
  std::pair<Dart, Dart> add_edge(std::size_t u, std::size_t v);
  // Reorders the rotation at v; `order` must list exactly the darts
  // currently attached to v.
  void set_rotation(std::size_t v, std::vector<Dart> order);

  std::size_t vertex_count() const { return rotations_.size(); }

  CombinatorialMap build(std::map<std::string, std::string> meta = {},
                         bool allow_disconnected = false) const;

 private:
  std::vector<std::vector<Dart>> rotations_;
  std::vector<Dart> alpha_;
};

}  // namespace homcode
