#include "homcode/map.hpp"

#include <algorithm>
#include <sstream>

#include "homcode/error.hpp"

namespace homcode {

namespace {

void check_permutation(const std::vector<Dart>& p, const char* name) {
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    Dart v = p[i];
    if (v >= p.size() || seen[v]) {
      std::ostringstream detail;
      detail << "{\"permutation\":\"" << name << "\",\"index\":" << i
             << ",\"value\":" << v << "}";
      throw Error(ErrorKind::NotPermutation,
                  std::string(name) + " is not a permutation of the dart set",
                  detail.str());
    }
    seen[v] = true;
  }
}

// Decomposes a permutation into cycles; each cycle starts at its minimal
// element and cycles are listed by that minimum, ascending.
std::vector<std::vector<Dart>> orbit_cycles(const std::vector<Dart>& perm,
                                            std::vector<std::size_t>& orbit_of) {
  std::vector<std::vector<Dart>> cycles;
  orbit_of.assign(perm.size(), SIZE_MAX);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (orbit_of[start] != SIZE_MAX) continue;
    std::vector<Dart> cycle;
    Dart d = Dart(start);
    do {
      orbit_of[d] = cycles.size();
      cycle.push_back(d);
      d = perm[d];
    } while (d != start);
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

}  // namespace

CombinatorialMap CombinatorialMap::build(std::vector<Dart> alpha, std::vector<Dart> sigma,
                                         std::map<std::string, std::string> meta,
                                         bool allow_disconnected) {
  if (alpha.size() != sigma.size())
    throw Error(ErrorKind::ValidationError, "alpha and sigma must cover the same dart set");
  check_permutation(alpha, "alpha");
  check_permutation(sigma, "sigma");
  if (alpha.size() % 2 != 0)
    throw Error(ErrorKind::OddDartCount, "dart count must be even (two darts per edge)",
                "{\"darts\":" + std::to_string(alpha.size()) + "}");
  for (std::size_t d = 0; d < alpha.size(); ++d) {
    if (alpha[alpha[d]] != d)
      throw Error(ErrorKind::NotInvolution, "alpha must be an involution",
                  "{\"dart\":" + std::to_string(d) + "}");
    if (alpha[d] == d)
      throw Error(ErrorKind::FixedPointEdge, "alpha must not fix any dart",
                  "{\"dart\":" + std::to_string(d) + "}");
  }

  CombinatorialMap m;
  m.alpha_ = std::move(alpha);
  m.sigma_ = std::move(sigma);
  m.meta_ = std::move(meta);
  m.sigma_inv_.assign(m.sigma_.size(), 0);
  for (std::size_t d = 0; d < m.sigma_.size(); ++d) m.sigma_inv_[m.sigma_[d]] = Dart(d);

  m.vertex_cycles_ = orbit_cycles(m.sigma_, m.vertex_of_);
  std::vector<Dart> phi(m.alpha_.size());
  for (std::size_t d = 0; d < phi.size(); ++d) phi[d] = m.sigma_[m.alpha_[d]];
  m.face_cycles_ = orbit_cycles(phi, m.face_of_);

  m.edge_of_.assign(m.alpha_.size(), SIZE_MAX);
  for (Dart d = 0; d < m.alpha_.size(); ++d) {
    if (m.edge_of_[d] != SIZE_MAX) continue;
    m.edge_of_[d] = m.edge_darts_.size();
    m.edge_of_[m.alpha_[d]] = m.edge_darts_.size();
    m.edge_darts_.emplace_back(d, m.alpha_[d]);
  }

  // Connectivity under the group generated by sigma and alpha.
  if (!m.alpha_.empty()) {
    std::vector<bool> reached(m.alpha_.size(), false);
    std::vector<Dart> stack{0};
    reached[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      Dart d = stack.back();
      stack.pop_back();
      for (Dart next : {m.sigma_[d], m.alpha_[d]}) {
        if (!reached[next]) {
          reached[next] = true;
          ++count;
          stack.push_back(next);
        }
      }
    }
    m.connected_ = (count == m.alpha_.size());
    if (!m.connected_ && !allow_disconnected)
      throw Error(ErrorKind::Disconnected, "map has more than one component",
                  "{\"reached_darts\":" + std::to_string(count) +
                      ",\"total_darts\":" + std::to_string(m.alpha_.size()) + "}");
  }
  return m;
}

std::map<std::size_t, std::size_t> CombinatorialMap::valence_profile() const {
  std::map<std::size_t, std::size_t> profile;
  for (const auto& cycle : vertex_cycles_) ++profile[cycle.size()];
  return profile;
}

std::size_t CombinatorialMap::uniform_valence() const {
  if (vertex_cycles_.empty()) return 0;
  std::size_t v = vertex_cycles_.front().size();
  for (const auto& cycle : vertex_cycles_)
    if (cycle.size() != v) return 0;
  return v;
}

bool CombinatorialMap::is_simple() const {
  std::vector<std::pair<std::size_t, std::size_t>> seen;
  seen.reserve(edge_darts_.size());
  for (std::size_t e = 0; e < edge_darts_.size(); ++e) {
    auto [u, v] = edge_endpoints(e);
    if (u == v) return false;
    seen.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

EulerGenus euler_genus(const CombinatorialMap& map) {
  if (map.dart_count() == 0)
    throw Error(ErrorKind::DegenerateParameters, "empty map has no underlying surface");
  if (!map.connected())
    throw Error(ErrorKind::Disconnected, "Euler genus requires a connected map");
  EulerGenus eg;
  eg.chi = (long long)map.vertex_count() - (long long)map.edge_count() +
           (long long)map.face_count();
  eg.genus = std::size_t((2 - eg.chi) / 2);
  return eg;
}

std::size_t MapBuilder::add_vertex() {
  rotations_.emplace_back();
  return rotations_.size() - 1;
}

std::pair<Dart, Dart> MapBuilder::add_edge(std::size_t u, std::size_t v) {
  if (u >= rotations_.size() || v >= rotations_.size())
    throw Error(ErrorKind::ValidationError, "add_edge endpoint does not exist");
  Dart a = Dart(alpha_.size()), b = Dart(alpha_.size() + 1);
  alpha_.push_back(b);
  alpha_.push_back(a);
  rotations_[u].push_back(a);
  rotations_[v].push_back(b);
  return {a, b};
}

void MapBuilder::set_rotation(std::size_t v, std::vector<Dart> order) {
  if (v >= rotations_.size())
    throw Error(ErrorKind::ValidationError, "set_rotation vertex does not exist");
  auto sorted_new = order, sorted_old = rotations_[v];
  std::sort(sorted_new.begin(), sorted_new.end());
  std::sort(sorted_old.begin(), sorted_old.end());
  if (sorted_new != sorted_old)
    throw Error(ErrorKind::ValidationError,
                "rotation must list exactly the darts attached to the vertex",
                "{\"vertex\":" + std::to_string(v) + "}");
  rotations_[v] = std::move(order);
}

CombinatorialMap MapBuilder::build(std::map<std::string, std::string> meta,
                                   bool allow_disconnected) const {
  std::vector<Dart> sigma(alpha_.size());
  for (const auto& rot : rotations_)
    for (std::size_t i = 0; i < rot.size(); ++i) sigma[rot[i]] = rot[(i + 1) % rot.size()];
  return CombinatorialMap::build(alpha_, sigma, std::move(meta), allow_disconnected);
}

}  // namespace homcode
